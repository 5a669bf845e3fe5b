#pragma once

// Table-driven arithmetic in F_q for q <= 97.
//
// Elements are the integers 0..q-1. For q = p^e the base-p digits of an
// element (lowest first) are its coordinates in F_p[x] / (modulus).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewrank {

using Elem = std::uint8_t;

class GaloisField {
 public:
  long q() const noexcept { return q_; }
  long p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  /// Monic modulus coefficients c0..ce (low degree first); empty for prime q.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  /// Throws std::domain_error for 0.
  Elem inv(Elem a) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.q_ == b.q_ && a.modulus_ == b.modulus_;
  }

 private:
  friend std::shared_ptr<const GaloisField> make_field(long q, std::optional<std::vector<int>> modulus);
  size_t idx(Elem a, Elem b) const noexcept { return static_cast<size_t>(a) * static_cast<size_t>(q_) + b; }
  void verify_axioms() const;

  long q_ = 0;
  long p_ = 0;
  int e_ = 1;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Human-readable list of the q values make_field accepts without a modulus.
std::string supported_fields();

/// Builds F_q. Built-in moduli cover q = 4, 8, 9; any prime q <= 97 works.
/// Other prime powers up to 97 need an explicit irreducible modulus
/// (c0..ce, low degree first, monic).
FieldPtr make_field(long q, std::optional<std::vector<int>> modulus = std::nullopt);

}  // namespace skewrank
