#include <doctest.h>

#include "skewrank/homopoly.hpp"

using namespace skewrank;

TEST_CASE("lambda scalars") {
  const auto Q = LambdaScalar::big_q(2);
  const LambdaScalar one(2, Rational(1));
  const auto g = gamma_lambda(2, 2);
  for (long lam : {2L, 5L, 8L}) CHECK(eval_lambda(g, lam) == gamma(2, lam, 2));
  CHECK(eval_lambda(Q * Q - one, 3) == 63);
  // Shifting by j substitutes lambda - 2j.
  CHECK(eval_lambda(shift(Q + one, 1), 6) == eval_lambda(Q + one, 4));
  CHECK((Q - Q).is_zero());
}

TEST_CASE("skew-q product basics") {
  const long q = 3;
  const auto one = HPoly::one(q);
  const auto x = HPoly::x(q);
  const auto y = HPoly::y(q);
  CHECK(skew_q_product(one, x) == x);
  CHECK(skew_q_product(x, one) == x);
  // Y * X = q^2 XY, X * Y = XY.
  const auto yx = skew_q_product(y, x);
  CHECK(yx.degree() == 2);
  CHECK(eval_lambda(yx.coeff(1), 0) == 9);
  CHECK(eval_lambda(skew_q_product(x, y).coeff(1), 0) == 1);
  CHECK_THROWS_AS(skew_q_product(HPoly::x(2), x), std::invalid_argument);
}

TEST_CASE("powers of mu and nu match their closed forms") {
  for (long q : {2L, 3L}) {
    for (int k = 0; k <= 4; ++k) {
      CHECK(skew_q_power(mu(q), k) == mu_power(q, k));
      CHECK(skew_q_power(nu(q), k) == nu_power(q, k));
    }
  }
}

TEST_CASE("transform of omega's dual at lambda = m") {
  // The zero code has enumerator X^n; its transform divided by |C| = 1 is omega.
  const auto p = SchemeParams::make(3, 4);
  const auto e = HPoly::from_integers(3, {1, 0, 0});
  const auto out = coefficients_at(skew_q_transform(e, mu(3), nu(3)), p.m);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == 1);
  CHECK(out[1] == 260);
  CHECK(out[2] == 468);
}

TEST_CASE("evaluate") {
  const auto p = HPoly::from_integers(2, {1, 44, 36});
  CHECK(evaluate(p, 1, 1, 0) == 81);
  CHECK(evaluate(p, 2, 1, 0) == 4 + 88 + 36);
  CHECK(p.to_string().find("Y^2") != std::string::npos);
}
