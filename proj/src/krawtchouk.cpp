#include "skewrank/krawtchouk.hpp"

#include <stdexcept>
#include <string>

namespace skewrank {

namespace {

void check_range(long k, long x, long y, const char* fn) {
  if (k < 0 || k > y || x < 0 || x > y) {
    throw std::out_of_range(std::string(fn) + ": need 0 <= x, k <= " + std::to_string(y) + ", got x=" +
                            std::to_string(x) + " k=" + std::to_string(k));
  }
}

Rational signed_term(long parity, const Rational& v) { return parity % 2 ? Rational(-v) : v; }

}  // namespace

Rational generalized_p(const Rational& b, const Rational& c, long k, long x, long y) {
  check_range(k, x, y, "generalized_p");
  const Rational cby = c * rpow(b, y);
  Rational total = 0;
  for (long j = 0; j <= k; ++j) {
    Rational term = rpow(cby, j) * rpow(b, (k - j) * (k - j - 1) / 2) * gauss_base(b, y - j, y - k) *
                    gauss_base(b, y - x, j);
    total += signed_term(k - j, term);
  }
  return total;
}

std::pair<Rational, Rational> skew_parameters(const SchemeParams& params) {
  return {qpow(params.q, 2), qpow(params.q, params.m - 2L * params.n)};
}

Integer skew_p(const SchemeParams& params, long k, long x) {
  const long n = params.n;
  check_range(k, x, n, "skew_p");
  const long q = params.q;
  Rational total = 0;
  for (long j = 0; j <= k; ++j) {
    Rational term = qpow(q, (k - j) * (k - j - 1)) * gauss(q, n - j, n - k) * gauss(q, n - x, j) *
                    qpow(q, j * params.m);
    total += signed_term(k - j, term);
  }
  return to_integer(total, "skew_p");
}

Integer skew_c(const SchemeParams& params, long k, long x) {
  const long n = params.n;
  check_range(k, x, n, "skew_c");
  const long q = params.q;
  Rational total = 0;
  for (long j = 0; j <= k; ++j) {
    Rational term = qpow(q, 2 * j * (n - x)) * qpow(q, j * (j - 1)) * gauss(q, x, j) * gauss(q, n - x, k - j) *
                    gamma(q, params.m - 2 * j, k - j);
    total += signed_term(j, term);
  }
  return to_integer(total, "skew_c");
}

KrawtchoukMatrix p_matrix(const SchemeParams& params) {
  KrawtchoukMatrix out{params, {}};
  out.entries.assign(static_cast<size_t>(params.n) + 1, {});
  for (long x = 0; x <= params.n; ++x) {
    for (long k = 0; k <= params.n; ++k) out.entries[static_cast<size_t>(x)].push_back(skew_p(params, k, x));
  }
  return out;
}

}  // namespace skewrank
