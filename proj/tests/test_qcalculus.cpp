#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skewrank/qcalculus.hpp"

using namespace skewrank;

namespace {

HPoly random_poly(long q, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<LambdaScalar> cs;
  for (int i = 0; i <= degree; ++i) {
    std::map<int, Rational> terms;
    for (int e = -1; e <= 1; ++e) {
      if (int v = d(rng)) terms[e] = Rational(v);
    }
    cs.emplace_back(q, terms);
  }
  return HPoly(q, cs);
}

oracle::Fn2 as_function(const HPoly& p, long lambda) {
  return [p, lambda](const Rational& x, const Rational& y) { return evaluate(p, x, y, lambda); };
}

}  // namespace

TEST_CASE("coefficient derivatives match difference quotients") {
  std::mt19937_64 rng(7);
  const std::vector<std::pair<Rational, Rational>> points{{2, 3}, {Rational(1, 2), 5}, {-3, Rational(2, 7)}};
  for (long q : {2L, 3L}) {
    for (int deg = 0; deg <= 4; ++deg) {
      const auto p = random_poly(q, deg, rng);
      for (int phi = 0; phi <= deg; ++phi) {
        const auto dx = q_derivative(p, phi);
        const auto dy = q_inv_derivative(p, phi);
        for (long lam : {4L, 7L}) {
          for (const auto& [x, y] : points) {
            CHECK(evaluate(dx, x, y, lam) == oracle::x_difference(as_function(p, lam), q, phi, x, y));
            CHECK(evaluate(dy, x, y, lam) == oracle::y_difference(as_function(p, lam), q, phi, x, y));
          }
        }
      }
    }
  }
}

TEST_CASE("derivative beyond the degree is zero") {
  const auto p = HPoly::from_integers(2, {1, 2, 3});
  CHECK(q_derivative(p, 3).is_zero());
  CHECK(q_inv_derivative(p, 5).is_zero());
  CHECK_THROWS_AS(q_derivative(p, -1), std::invalid_argument);
}

TEST_CASE("leibniz rules against direct differentiation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const long q = trial % 2 ? 3 : 2;
    const auto f = random_poly(q, static_cast<int>(rng() % 4), rng);
    const auto g = random_poly(q, static_cast<int>(rng() % 4), rng);
    const auto fg = skew_q_product(f, g);
    for (int phi = 0; phi <= fg.degree(); ++phi) {
      CHECK(leibniz_q(f, g, phi) == q_derivative(fg, phi));
      CHECK(leibniz_q_inv(f, g, phi) == q_inv_derivative(fg, phi));
    }
  }
}

TEST_CASE("closed forms for derivatives of mu and nu powers") {
  for (long q : {2L, 3L}) {
    for (int k = 0; k <= 4; ++k) {
      for (int phi = 0; phi <= k; ++phi) {
        CHECK(mu_power_derivative(q, k, phi) == q_derivative(mu_power(q, k), phi));
        CHECK(nu_power_derivative(q, k, phi) == q_derivative(nu_power(q, k), phi));
        CHECK(mu_power_inv_derivative(q, k, phi) == q_inv_derivative(mu_power(q, k), phi));
        CHECK(nu_power_inv_derivative(q, k, phi) == q_inv_derivative(nu_power(q, k), phi));
      }
      for (int l = 0; l <= k; ++l) CHECK_NOTHROW(eval_nu_derivative_at_ones(q, k, l));
    }
  }
  CHECK_THROWS_AS(mu_power_derivative(2, 1, 2), std::invalid_argument);
}
