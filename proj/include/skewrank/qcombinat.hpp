#pragma once

// Skew-q-nary combinatorics: Gaussian coefficients in base q^2, the Gamma and
// Beta products, sigma, and the count of alternating forms by skew rank.
//
// Every function is pure and exact. Arguments x may be negative; the results
// are then rationals through negative powers of q.

#include <optional>
#include <utility>

#include "skewrank/exact.hpp"

namespace skewrank {

/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<long, int>> prime_power_decompose(long q);

/// The scheme of t x t alternating forms over F_q.
///
/// n is the largest skew rank, m = t(t-1)/(2n), so n*m = t(t-1)/2 is the
/// dimension of the space.
struct SchemeParams {
  long q = 2;
  int t = 2;
  int n = 1;
  int m = 1;

  /// Validates q (prime power) and t (>= 2).
  static SchemeParams make(long q, int t);

  int dimension() const noexcept { return n * m; }
  /// q^{mn}, the number of t x t alternating forms.
  Integer space_size() const { return ipow(q, static_cast<unsigned long>(dimension())); }

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// [x k] = prod_{i<k} (q^{2x} - q^{2i}) / (q^{2k} - q^{2i}).
Rational gauss(long q, long x, long k);

/// Gaussian coefficient in an arbitrary rational base b != 1:
/// prod_{i<k} (b^x - b^i) / (b^k - b^i). For b == 1 this is the ordinary
/// binomial coefficient (the limit b -> 1).
Rational gauss_base(const Rational& b, long x, long k);

/// gamma(x, k) = prod_{i<k} (q^x - q^{2i}).
Rational gamma(long q, long x, long k);

/// beta(x, k) = prod_{i<k} [x-i 1].
Rational beta(long q, long x, long k);

/// i(i-1)/2.
long sigma(long i);

/// Number of t x t alternating forms of skew rank s (zero outside 0..n).
Integer xi(const SchemeParams& params, long s);

/// Ordinary binomial coefficient C(a, b); zero unless 0 <= b <= a.
Integer binomial(long a, long b);

}  // namespace skewrank
