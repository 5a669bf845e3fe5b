#include "skewrank/qcalculus.hpp"

#include <stdexcept>

#include "skewrank/errors.hpp"

namespace skewrank {

namespace {

void check_phi(int phi, const char* fn) {
  if (phi < 0) throw std::invalid_argument(std::string(fn) + ": phi must be >= 0");
}

void check_k_phi(int k, int phi, const char* fn) {
  check_phi(phi, fn);
  if (k < phi) throw std::invalid_argument(std::string(fn) + ": need phi <= k");
}

}  // namespace

HPoly q_derivative(const HPoly& p, int phi) {
  check_phi(phi, "q_derivative");
  const int r = p.degree();
  if (phi > r) return HPoly(p.q(), 0);
  HPoly out(p.q(), r - phi);
  for (int i = 0; i <= r - phi; ++i) out.set_coeff(i, p.coeff(i) * beta(p.q(), r - i, phi));
  return out;
}

HPoly q_inv_derivative(const HPoly& p, int phi) {
  check_phi(phi, "q_inv_derivative");
  const int s = p.degree();
  if (phi > s) return HPoly(p.q(), 0);
  const long q = p.q();
  HPoly out(q, s - phi);
  for (int i = 0; i <= s - phi; ++i) {
    const long ip = i + phi;
    const Rational w = qpow(q, 2 * (static_cast<long>(phi) * (1 - ip) + sigma(phi))) * beta(q, ip, phi);
    out.set_coeff(i, p.coeff(static_cast<int>(ip)) * w);
  }
  return out;
}

Rational eval_nu_derivative_at_ones(long q, int j, int l) {
  if (l < 0 || l > j) throw std::invalid_argument("eval_nu_derivative_at_ones: need 0 <= l <= j");
  const Rational v = evaluate(q_derivative(nu_power(q, j), l), 1, 1, 0);
  const Rational expected = l == j ? beta(q, j, j) : Rational(0);
  if (v != expected) {
    throw IdentityViolation("nu^[" + std::to_string(j) + "](" + std::to_string(l) + ")(1,1) = " + v.get_str() +
                            ", expected " + expected.get_str());
  }
  return v;
}

HPoly mu_power_derivative(long q, int k, int phi) {
  check_k_phi(k, phi, "mu_power_derivative");
  return beta(q, k, phi) * mu_power(q, k - phi);
}

HPoly nu_power_derivative(long q, int k, int phi) {
  check_k_phi(k, phi, "nu_power_derivative");
  return beta(q, k, phi) * nu_power(q, k - phi);
}

HPoly mu_power_inv_derivative(long q, int k, int phi) {
  check_k_phi(k, phi, "mu_power_inv_derivative");
  const Rational c = qpow(q, -2 * sigma(phi)) * beta(q, k, phi);
  return (gamma_lambda(q, phi) * c) * shift(mu_power(q, k - phi), phi);
}

HPoly nu_power_inv_derivative(long q, int k, int phi) {
  check_k_phi(k, phi, "nu_power_inv_derivative");
  Rational c = beta(q, k, phi);
  if (phi % 2) c = -c;
  return c * nu_power(q, k - phi);
}

HPoly leibniz_q(const HPoly& f, const HPoly& g, int phi) {
  check_phi(phi, "leibniz_q");
  const long q = f.q();
  const int r = f.degree();
  const int deg = f.degree() + g.degree() - phi;
  HPoly out(q, deg < 0 ? 0 : deg);
  if (deg < 0) return out;
  for (int l = 0; l <= phi; ++l) {
    if (l > r || phi - l > g.degree()) continue;
    const Rational w = gauss(q, phi, l) * qpow(q, 2L * (phi - l) * (r - l));
    out += w * skew_q_product(q_derivative(f, l), q_derivative(g, phi - l));
  }
  return out;
}

HPoly leibniz_q_inv(const HPoly& f, const HPoly& g, int phi) {
  check_phi(phi, "leibniz_q_inv");
  const long q = f.q();
  const int s = g.degree();
  const int deg = f.degree() + g.degree() - phi;
  HPoly out(q, deg < 0 ? 0 : deg);
  if (deg < 0) return out;
  for (int l = 0; l <= phi; ++l) {
    if (l > f.degree() || phi - l > s) continue;
    const Rational w = gauss(q, phi, l) * qpow(q, 2L * l * (s - phi + l));
    out += w * skew_q_product(q_inv_derivative(f, l), shift(q_inv_derivative(g, phi - l), l));
  }
  return out;
}

}  // namespace skewrank
