#pragma once

// Eigenvalues of the alternating-forms scheme: the generalized Krawtchouk
// polynomials, their skew specialization, and the explicit C_k(x, n).

#include <utility>
#include <vector>

#include "skewrank/qcombinat.hpp"

namespace skewrank {

/// sum_{j<=k} (-1)^{k-j} (c b^y)^j b^{C(k-j,2)} [y-j, y-k]_b [y-x, j]_b.
/// Requires 0 <= x, k <= y.
Rational generalized_p(const Rational& b, const Rational& c, long k, long x, long y);

/// The (b, c) pair that specializes generalized_p to the skew scheme:
/// b = q^2, c = q^{m-2n}.
std::pair<Rational, Rational> skew_parameters(const SchemeParams& params);

/// P_k(x, n) in its explicit skew form. Requires 0 <= x, k <= n.
Integer skew_p(const SchemeParams& params, long k, long x);

/// C_k(x, n) = sum_j (-1)^j q^{2j(n-x)} q^{j(j-1)} [x j] [n-x, k-j] gamma(m-2j, k-j).
Integer skew_c(const SchemeParams& params, long k, long x);

struct KrawtchoukMatrix {
  SchemeParams params;
  /// entries[x][k] = P_k(x, n).
  std::vector<std::vector<Integer>> entries;
};

KrawtchoukMatrix p_matrix(const SchemeParams& params);

}  // namespace skewrank
