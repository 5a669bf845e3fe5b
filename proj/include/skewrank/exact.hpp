#pragma once

// Exact integer and rational arithmetic shared by every module. Nothing in
// this library touches floating point.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace skewrank {

using Integer = mpz_class;
using Rational = mpq_class;

// base^exp for exp >= 0.
inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer ipow(long base, unsigned long exp) { return ipow(Integer(base), exp); }

// base^exp for any integer exp; base must be nonzero when exp < 0.
inline Rational rpow(const Rational& base, long exp) {
  if (exp >= 0) {
    Integer num = ipow(base.get_num(), static_cast<unsigned long>(exp));
    Integer den = ipow(base.get_den(), static_cast<unsigned long>(exp));
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (base == 0) throw std::domain_error("rpow: zero to a negative power");
  Rational inv = 1 / base;
  return rpow(inv, -exp);
}

// a/b in canonical form (mpq_class(a, b) alone leaves it unreduced).
inline Rational ratio(long a, long b) {
  if (b == 0) throw std::domain_error("ratio: zero denominator");
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// q^e as an exact rational (negative e allowed).
inline Rational qpow(long q, long e) { return rpow(Rational(q), e); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer to_integer(const Rational& r, const char* what) {
  if (!is_integer(r)) {
    throw std::domain_error(std::string(what) + ": expected an integer, got " + r.get_str());
  }
  return r.get_num();
}

// Exact base-q logarithm of a power of q; throws if value is not q^k.
inline unsigned long exact_log(const Integer& value, long q) {
  if (value <= 0) throw std::domain_error("exact_log: nonpositive value");
  Integer v = value;
  unsigned long k = 0;
  while (v != 1) {
    if (v % q != 0) throw std::domain_error("exact_log: " + value.get_str() + " is not a power of " + std::to_string(q));
    v /= q;
    ++k;
  }
  return k;
}

}  // namespace skewrank
