#include "skewrank/qcombinat.hpp"

#include <stdexcept>
#include <string>

namespace skewrank {

namespace {

void require_nonnegative_k(long k, const char* fn) {
  if (k < 0) throw std::invalid_argument(std::string(fn) + ": k must be >= 0, got " + std::to_string(k));
}

}  // namespace

std::optional<std::pair<long, int>> prime_power_decompose(long q) {
  if (q < 2) return std::nullopt;
  long p = 0;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(q, 1);
  int e = 0;
  long v = q;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1) return std::nullopt;
  return std::make_pair(p, e);
}

SchemeParams SchemeParams::make(long q, int t) {
  if (!prime_power_decompose(q)) {
    throw std::invalid_argument("q=" + std::to_string(q) + " is not a prime power");
  }
  if (t < 2) throw std::invalid_argument("t must be >= 2, got " + std::to_string(t));
  SchemeParams p;
  p.q = q;
  p.t = t;
  p.n = t / 2;
  p.m = t * (t - 1) / (2 * p.n);
  return p;
}

Rational gauss(long q, long x, long k) {
  require_nonnegative_k(k, "gauss");
  Rational r = 1;
  const Rational q2x = qpow(q, 2 * x);
  const Rational q2k = qpow(q, 2 * k);
  for (long i = 0; i < k; ++i) {
    const Rational q2i = qpow(q, 2 * i);
    r *= (q2x - q2i) / (q2k - q2i);
  }
  return r;
}

Rational gauss_base(const Rational& b, long x, long k) {
  require_nonnegative_k(k, "gauss_base");
  Rational r = 1;
  if (b == 1) {
    for (long i = 0; i < k; ++i) r *= ratio(x - i, k - i);
    return r;
  }
  if (b == 0) throw std::invalid_argument("gauss_base: base must be nonzero");
  const Rational bx = rpow(b, x);
  const Rational bk = rpow(b, k);
  for (long i = 0; i < k; ++i) {
    const Rational bi = rpow(b, i);
    r *= (bx - bi) / (bk - bi);
  }
  return r;
}

Rational gamma(long q, long x, long k) {
  require_nonnegative_k(k, "gamma");
  Rational r = 1;
  const Rational qx = qpow(q, x);
  for (long i = 0; i < k; ++i) r *= qx - qpow(q, 2 * i);
  return r;
}

Rational beta(long q, long x, long k) {
  require_nonnegative_k(k, "beta");
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= gauss(q, x - i, 1);
  return r;
}

long sigma(long i) { return i * (i - 1) / 2; }

Integer xi(const SchemeParams& params, long s) {
  if (s < 0 || s > params.n) return 0;
  const long q = params.q;
  Rational r = qpow(q, 2 * sigma(s));
  for (long i = 0; i <= 2 * s - 1; ++i) r *= qpow(q, params.t - i) - 1;
  for (long i = 1; i <= s; ++i) r /= qpow(q, 2 * i) - 1;
  return to_integer(r, "xi");
}

Integer binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

}  // namespace skewrank
