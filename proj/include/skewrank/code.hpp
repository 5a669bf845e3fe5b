#pragma once

// Linear codes in the space of t x t alternating forms, their duals, and
// weight distributions by exhaustive enumeration.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "skewrank/qcombinat.hpp"
#include "skewrank/skewmat.hpp"

namespace skewrank {

/// Counts c_0..c_n of codewords by skew rank.
struct WeightDist {
  SchemeParams params;
  std::vector<Integer> counts;

  Integer total() const;
  friend bool operator==(const WeightDist& a, const WeightDist& b) {
    return a.params == b.params && a.counts == b.counts;
  }
};

struct EnumOptions {
  /// Largest number of codewords an enumeration may visit.
  std::uint64_t budget = std::uint64_t{1} << 26;
  /// Worker count; 0 means hardware concurrency.
  unsigned threads = 0;
};

class LinearCode {
 public:
  /// basis must be linearly independent (throws std::invalid_argument).
  LinearCode(FieldPtr field, SchemeParams params, std::vector<SkewMat> basis);

  /// Reduces arbitrary rows to an independent basis; `dropped` receives the
  /// number of dependent rows discarded.
  static LinearCode from_rows(FieldPtr field, SchemeParams params, const std::vector<SkewMat>& rows,
                              size_t* dropped = nullptr);
  static LinearCode zero(FieldPtr field, SchemeParams params);
  static LinearCode full(FieldPtr field, SchemeParams params);

  const GaloisField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  const SchemeParams& params() const noexcept { return params_; }
  const std::vector<SkewMat>& basis() const noexcept { return basis_; }
  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  Integer size() const { return ipow(params_.q, static_cast<unsigned long>(dimension())); }

  /// Coordinate matrix, one upper triangle per row.
  Matrix coordinates() const;

  /// Equality as sets of codewords.
  bool same_code(const LinearCode& o) const;
  bool contains(const SkewMat& a) const;

 private:
  FieldPtr field_;
  SchemeParams params_;
  std::vector<SkewMat> basis_;
};

/// Sum over the strict upper triangle of a_ij b_ij.
Elem coordinate_pairing(const GaloisField& f, const SkewMat& a, const SkewMat& b);
/// Tr(A^T B) over the full matrices.
Elem trace_inner_product(const GaloisField& f, const SkewMat& a, const SkewMat& b);

/// {B : <A, B> = 0 for all A in c} under the coordinate pairing.
LinearCode dual(const LinearCode& c);

/// Throws BudgetExceeded when q^k exceeds options.budget. Codewords are
/// visited in lexicographic order of their coefficient vectors.
WeightDist weight_distribution(const LinearCode& c, const EnumOptions& options = {});

/// Smallest nonzero weight; nullopt for the zero code.
std::optional<int> min_distance(const WeightDist& w);
/// Largest nonzero weight; 0 for the zero code.
int diameter(const WeightDist& w);

/// Uniformly random k-dimensional code.
LinearCode random_code(FieldPtr field, SchemeParams params, int k, std::mt19937_64& rng);

}  // namespace skewrank
