#pragma once

#include <map>
#include <string>

#include "skewrank/exact.hpp"

namespace skewrank {

/// A coefficient function of lambda, stored as a Laurent polynomial in
/// Q = q^lambda with rational coefficients.
///
/// q is fixed per value. Zero coefficients are never stored, so two scalars
/// are equal exactly when their term maps are equal. Constants (no Q
/// dependence) combine with scalars of any q; everything else requires
/// matching q.
class LambdaScalar {
 public:
  LambdaScalar() = default;
  LambdaScalar(long q, const Rational& constant);
  LambdaScalar(long q, std::map<int, Rational> terms);

  /// c * Q^e.
  static LambdaScalar monomial(long q, int e, const Rational& c);
  /// Q itself.
  static LambdaScalar big_q(long q) { return monomial(q, 1, 1); }

  long q() const noexcept { return q_; }
  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational coefficient(int e) const;

  LambdaScalar& operator+=(const LambdaScalar& o);
  LambdaScalar& operator-=(const LambdaScalar& o);
  LambdaScalar& operator*=(const LambdaScalar& o);
  LambdaScalar& operator*=(const Rational& c);

  friend LambdaScalar operator+(LambdaScalar a, const LambdaScalar& b) { return a += b; }
  friend LambdaScalar operator-(LambdaScalar a, const LambdaScalar& b) { return a -= b; }
  friend LambdaScalar operator*(LambdaScalar a, const LambdaScalar& b) { return a *= b; }
  friend LambdaScalar operator*(LambdaScalar a, const Rational& c) { return a *= c; }
  friend LambdaScalar operator*(const Rational& c, LambdaScalar a) { return a *= c; }
  LambdaScalar operator-() const;

  friend bool operator==(const LambdaScalar& a, const LambdaScalar& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void adopt_q(const LambdaScalar& o);
  void prune();

  long q_ = 0;  // 0 while the value is a bare constant with no q attached
  std::map<int, Rational> terms_;
};

/// Substitutes lambda -> lambda - 2j, i.e. Q -> q^{-2j} Q.
LambdaScalar shift(const LambdaScalar& s, int j);

/// Value at Q = q^lambda.
Rational eval_lambda(const LambdaScalar& s, long lambda);

/// gamma(lambda, k) = prod_{i<k} (Q - q^{2i}).
LambdaScalar gamma_lambda(long q, long k);

}  // namespace skewrank
