#include "skewrank/homopoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewrank {

HPoly::HPoly(long q, int degree) : q_(q) {
  if (degree < 0) throw std::invalid_argument("HPoly: degree must be >= 0");
  coeffs_.assign(static_cast<size_t>(degree) + 1, LambdaScalar(q, Rational(0)));
}

HPoly::HPoly(long q, std::vector<LambdaScalar> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("HPoly: need at least one coefficient");
  for (const auto& c : coeffs_) {
    if (c.q() != 0 && c.q() != q_) throw std::invalid_argument("HPoly: coefficient has mismatched q");
  }
}

HPoly HPoly::constant(long q, int degree, const Rational& c) {
  HPoly p(q, degree);
  p.coeffs_[0] = LambdaScalar(q, c);
  return p;
}

HPoly HPoly::monomial(long q, int degree, int i, const LambdaScalar& c) {
  if (i < 0 || i > degree) throw std::out_of_range("HPoly::monomial: index outside 0..degree");
  HPoly p(q, degree);
  p.set_coeff(i, c);
  return p;
}

HPoly HPoly::from_rationals(long q, const std::vector<Rational>& coeffs) {
  std::vector<LambdaScalar> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.emplace_back(q, c);
  return HPoly(q, std::move(cs));
}

HPoly HPoly::from_integers(long q, const std::vector<Integer>& coeffs) {
  std::vector<Rational> rs(coeffs.begin(), coeffs.end());
  return from_rationals(q, rs);
}

LambdaScalar HPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return LambdaScalar(q_, Rational(0));
  return coeffs_[static_cast<size_t>(i)];
}

void HPoly::set_coeff(int i, LambdaScalar c) {
  if (i < 0 || i > degree()) throw std::out_of_range("HPoly::set_coeff: index outside 0..degree");
  if (c.q() != 0 && c.q() != q_) throw std::invalid_argument("HPoly: coefficient has mismatched q");
  coeffs_[static_cast<size_t>(i)] = std::move(c);
}

bool HPoly::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void HPoly::check_same_ring(const HPoly& o) const {
  if (o.q_ != q_) throw std::invalid_argument("HPoly: mismatched q");
  if (o.degree() != degree()) {
    throw std::invalid_argument("HPoly: degree mismatch (" + std::to_string(degree()) + " vs " +
                                std::to_string(o.degree()) + ")");
  }
}

HPoly& HPoly::operator+=(const HPoly& o) {
  check_same_ring(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  check_same_ring(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

HPoly& HPoly::operator*=(const LambdaScalar& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

HPoly& HPoly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

std::string HPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  const int r = degree();
  for (int i = 0; i <= r; ++i) {
    const auto& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (i > 0) os << "*Y^" << i;
    if (r - i > 0) os << "*X^" << (r - i);
  }
  if (first) os << "0";
  return os.str();
}

HPoly shift(const HPoly& p, int j) {
  std::vector<LambdaScalar> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.push_back(shift(c, j));
  return HPoly(p.q(), std::move(cs));
}

HPoly skew_q_product(const HPoly& a, const HPoly& b) {
  if (a.q() != b.q()) throw std::invalid_argument("skew_q_product: mismatched q");
  const long q = a.q();
  const int r = a.degree();
  const int s = b.degree();
  HPoly out(q, r + s);
  // Shifted copies of b, one per power of Y in a.
  std::vector<HPoly> shifted;
  shifted.reserve(static_cast<size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) shifted.push_back(shift(b, i));
  for (int u = 0; u <= r + s; ++u) {
    LambdaScalar acc(q, Rational(0));
    for (int i = std::max(0, u - s); i <= std::min(r, u); ++i) {
      const LambdaScalar& ai = a.coeffs()[static_cast<size_t>(i)];
      if (ai.is_zero()) continue;
      const LambdaScalar& bj = shifted[static_cast<size_t>(i)].coeffs()[static_cast<size_t>(u - i)];
      if (bj.is_zero()) continue;
      acc += (ai * bj) * qpow(q, 2L * i * s);
    }
    out.set_coeff(u, std::move(acc));
  }
  return out;
}

HPoly skew_q_power(const HPoly& a, int k) {
  if (k < 0) throw std::invalid_argument("skew_q_power: k must be >= 0");
  HPoly r = HPoly::one(a.q());
  for (int i = 0; i < k; ++i) r = skew_q_product(a, r);
  return r;
}

HPoly skew_q_transform(const HPoly& a) { return skew_q_transform(a, HPoly::x(a.q()), HPoly::y(a.q())); }

HPoly skew_q_transform(const HPoly& a, const HPoly& x, const HPoly& y) {
  if (x.q() != a.q() || y.q() != a.q()) throw std::invalid_argument("skew_q_transform: mismatched q");
  if (x.degree() != y.degree()) throw std::invalid_argument("skew_q_transform: x and y must have equal degree");
  const int r = a.degree();
  std::vector<HPoly> xp, yp;
  for (int i = 0; i <= r; ++i) {
    xp.push_back(skew_q_power(x, i));
    yp.push_back(skew_q_power(y, i));
  }
  HPoly out(a.q(), r * x.degree());
  for (int i = 0; i <= r; ++i) {
    const LambdaScalar& ai = a.coeffs()[static_cast<size_t>(i)];
    if (ai.is_zero()) continue;
    out += ai * skew_q_product(yp[static_cast<size_t>(i)], xp[static_cast<size_t>(r - i)]);
  }
  return out;
}

HPoly mu(long q) {
  return HPoly(q, {LambdaScalar(q, Rational(1)), LambdaScalar::big_q(q) - LambdaScalar(q, Rational(1))});
}

HPoly nu(long q) { return HPoly::from_rationals(q, {1, -1}); }

HPoly mu_power(long q, int k) {
  if (k < 0) throw std::invalid_argument("mu_power: k must be >= 0");
  HPoly out(q, k);
  for (int u = 0; u <= k; ++u) out.set_coeff(u, gamma_lambda(q, u) * gauss(q, k, u));
  return out;
}

HPoly nu_power(long q, int k) {
  if (k < 0) throw std::invalid_argument("nu_power: k must be >= 0");
  std::vector<Rational> cs;
  for (int u = 0; u <= k; ++u) {
    Rational c = gauss(q, k, u) * qpow(q, static_cast<long>(u) * (u - 1));
    cs.push_back(u % 2 ? Rational(-c) : c);
  }
  return HPoly::from_rationals(q, cs);
}

HPoly omega(const SchemeParams& params) {
  std::vector<Integer> cs;
  for (int i = 0; i <= params.n; ++i) cs.push_back(xi(params, i));
  return HPoly::from_integers(params.q, cs);
}

Rational evaluate(const HPoly& p, const Rational& x, const Rational& y, long lambda) {
  const int r = p.degree();
  Rational total = 0;
  for (int i = 0; i <= r; ++i) {
    const auto& c = p.coeffs()[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational term = eval_lambda(c, lambda);
    for (int j = 0; j < i; ++j) term *= y;
    for (int j = 0; j < r - i; ++j) term *= x;
    total += term;
  }
  return total;
}

std::vector<Rational> coefficients_at(const HPoly& p, long lambda) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(eval_lambda(c, lambda));
  return out;
}

}  // namespace skewrank
