#pragma once

// Homogeneous bivariate polynomials sum_i a_i(lambda) Y^i X^{r-i} and the
// skew-q algebra on them.

#include <string>
#include <vector>

#include "skewrank/lambda_ring.hpp"
#include "skewrank/qcombinat.hpp"

namespace skewrank {

class HPoly {
 public:
  /// Zero polynomial of the given degree.
  HPoly(long q, int degree);
  /// Coefficient i multiplies Y^i X^{r-i}; r = coeffs.size() - 1.
  HPoly(long q, std::vector<LambdaScalar> coeffs);

  /// Degree-0 unit.
  static HPoly one(long q) { return constant(q, 0, 1); }
  /// c * Y^i X^{degree-i}.
  static HPoly monomial(long q, int degree, int i, const LambdaScalar& c);
  /// Coefficients are lambda-free rationals.
  static HPoly from_rationals(long q, const std::vector<Rational>& coeffs);
  static HPoly from_integers(long q, const std::vector<Integer>& coeffs);
  static HPoly x(long q) { return from_rationals(q, {1, 0}); }
  static HPoly y(long q) { return from_rationals(q, {0, 1}); }

  long q() const noexcept { return q_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<LambdaScalar>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of Y^i X^{r-i}; zero outside 0..r.
  LambdaScalar coeff(int i) const;
  void set_coeff(int i, LambdaScalar c);

  bool is_zero() const;

  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  /// Coefficientwise multiplication by a scalar (no lambda shift).
  HPoly& operator*=(const LambdaScalar& c);
  HPoly& operator*=(const Rational& c);

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const LambdaScalar& c, HPoly a) { return a *= c; }
  friend HPoly operator*(const Rational& c, HPoly a) { return a *= c; }

  /// Same degree and termwise equal coefficients.
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  static HPoly constant(long q, int degree, const Rational& c);
  void check_same_ring(const HPoly& o) const;

  long q_;
  std::vector<LambdaScalar> coeffs_;
};

/// Applies the lambda shift lambda -> lambda - 2j to every coefficient.
HPoly shift(const HPoly& p, int j);

/// a * b with c_u(lambda) = sum_i q^{2 i deg(b)} a_i(lambda) b_{u-i}(lambda - 2i).
HPoly skew_q_product(const HPoly& a, const HPoly& b);

/// a^[0] = 1, a^[k] = a * a^[k-1] (right-nested).
HPoly skew_q_power(const HPoly& a, int k);

/// sum_i a_i(lambda) Y^[i] * X^[r-i].
HPoly skew_q_transform(const HPoly& a);

/// sum_i a_i(lambda) y^[i] * x^[r-i]: the transform with x and y substituted
/// for X and Y.
HPoly skew_q_transform(const HPoly& a, const HPoly& x, const HPoly& y);

/// mu(X,Y;lambda) = X + (Q - 1) Y.
HPoly mu(long q);
/// nu(X,Y;lambda) = X - Y.
HPoly nu(long q);

/// Closed form of mu^[k]: coefficient u is [k u] gamma(lambda, u).
HPoly mu_power(long q, int k);
/// Closed form of nu^[k]: coefficient u is (-1)^u q^{u(u-1)} [k u].
HPoly nu_power(long q, int k);

/// Weight enumerator of the whole space: coefficient i is xi(params, i).
HPoly omega(const SchemeParams& params);

/// sum_i a_i(lambda) y^i x^{r-i}.
Rational evaluate(const HPoly& p, const Rational& x, const Rational& y, long lambda);

/// Coefficients evaluated at lambda; all must be lambda-free after
/// substitution, which always holds.
std::vector<Rational> coefficients_at(const HPoly& p, long lambda);

}  // namespace skewrank
