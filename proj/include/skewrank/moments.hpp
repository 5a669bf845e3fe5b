#pragma once

// Moment identities linking a code's weight distribution to its dual's, the
// two closed-form summation lemmas behind them, triangular inversion, and
// MSRD codes.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewrank/code.hpp"

namespace skewrank {

using Sides = std::pair<Rational, Rational>;

/// sum_{i<=n-phi} [n-i, phi] c_i against q^{m(n-phi)}/|C'| sum_{i<=phi} [n-i, n-phi] c'_i.
Sides check_first_moment(const WeightDist& w, const WeightDist& w_dual, int phi);

/// sum_{i>=phi} q^{2phi(n-i)} [i phi] c_i against
/// q^{k-m phi} sum_{i<=phi} (-1)^i q^{2 sigma_i} q^{2i(phi-i)} [n-i, n-phi] gamma(m-2i, phi-i) c'_i.
/// k_dim defaults to log_q(sum w).
Sides check_second_moment(const WeightDist& w, const WeightDist& w_dual, int phi,
                          std::optional<int> k_dim = std::nullopt);

struct CorollaryCheck {
  std::string clause;  // "first", "second" or "diameter"
  int phi = 0;
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// The moment identities specialised to what d' and the diameter of the dual
/// alone imply, without the dual distribution. A missing d' (zero dual)
/// counts as n + 1.
std::vector<CorollaryCheck> corollary_bounds(const WeightDist& w, std::optional<int> d_dual, int diameter_dual);

/// sum_{i<=j} [j i] (-1)^i q^{2 sigma_i} gamma(lambda-2i, phi). Throws
/// IdentityViolation unless it equals gamma(2phi, j) gamma(lambda-2j, phi-j) q^{j(lambda-2j)}
/// (zero when j > phi).
Rational delta_closed(long q, long lambda, int phi, int j);

/// sum_{l<=i} [i l][Lambda-i, phi-l] q^{2l(Lambda-phi)} (-1)^l q^{2 sigma_l} gamma(2(phi-l), i-l).
/// Requires 0 <= i <= phi <= Lambda. Throws IdentityViolation unless it
/// equals (-1)^i q^{2 sigma_i} [Lambda-i, Lambda-phi].
Rational epsilon_closed(long q, long Lambda, int phi, int i);

/// a_j = sum_{i<=j} [l-i, l-j] b_i.
std::vector<Rational> forward_sequence(const std::vector<Rational>& b, int l, long q);
/// b_i = sum_{j<=i} (-1)^{i-j} q^{2 sigma_{i-j}} [l-j, l-i] a_j.
std::vector<Rational> invert_sequence(const std::vector<Rational>& a, int l, long q);

/// Weight distribution of a linear MSRD code with minimum distance d,
/// 1 <= d <= n + 1 (d = n + 1 is the zero code).
WeightDist msrd_distribution(const SchemeParams& params, int d);

/// |C| <= q^{m(n-d+1)}.
bool singleton_holds(const SchemeParams& params, const Integer& size, int d);

struct MsrdSearchOptions {
  std::uint64_t seed = 1;
  /// Candidate generator matrices tried before giving up.
  std::uint64_t max_trials = 200000;
  EnumOptions enumeration;
};

/// Randomized greedy search for a linear code of dimension m(n-d+1) and
/// minimum distance d, verified by enumeration. nullopt when the trial
/// budget runs out. Throws std::invalid_argument unless 1 <= d <= n and
/// BudgetExceeded when the target size exceeds the enumeration budget.
std::optional<LinearCode> find_msrd(FieldPtr field, const SchemeParams& params, int d,
                                    const MsrdSearchOptions& options = {});

}  // namespace skewrank
