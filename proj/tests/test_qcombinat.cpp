#include <doctest.h>

#include "oracles.hpp"
#include "skewrank/qcombinat.hpp"

using namespace skewrank;

TEST_CASE("scheme parameters") {
  auto p = SchemeParams::make(3, 4);
  CHECK(p.n == 2);
  CHECK(p.m == 3);
  p = SchemeParams::make(2, 5);
  CHECK(p.n == 2);
  CHECK(p.m == 5);
  p = SchemeParams::make(4, 7);
  CHECK(p.n == 3);
  CHECK(p.m == 7);
  CHECK(p.space_size() == Integer(1) << 42);
  CHECK_THROWS_AS(SchemeParams::make(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(SchemeParams::make(2, 1), std::invalid_argument);
}

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decompose(9) == std::pair<long, int>{3, 2});
  CHECK(prime_power_decompose(32) == std::pair<long, int>{2, 5});
  CHECK(prime_power_decompose(7) == std::pair<long, int>{7, 1});
  CHECK_FALSE(prime_power_decompose(12));
  CHECK_FALSE(prime_power_decompose(1));
}

TEST_CASE("gaussian binomials") {
  CHECK(gauss(2, 4, 2) == 357);
  CHECK(gauss(3, 3, 1) == 91);
  CHECK(gauss(2, 5, 0) == 1);
  CHECK(gauss(2, 3, 4) == 0);
  CHECK_THROWS_AS(gauss(2, 3, -1), std::invalid_argument);
  // Base q^2: [3 1] = 1 + 4 + 16.
  CHECK(gauss(2, 3, 1) == 21);
  CHECK(gauss(2, 3, 1) == gauss(2, 3, 2));
  CHECK(gauss_base(Rational(1), 6, 2) == binomial(6, 2));
  // Negative upper argument stays rational.
  CHECK(gauss(2, -1, 1) == Rational(-1, 4));
}

TEST_CASE("gamma beta sigma") {
  CHECK(sigma(0) == 0);
  CHECK(sigma(1) == 0);
  CHECK(sigma(4) == 6);
  CHECK(gamma(2, 3, 1) == 7);
  CHECK(gamma(2, 3, 2) == 7 * 4);
  CHECK(gamma(3, 5, 0) == 1);
  CHECK(beta(2, 3, 3) == 1 * 5 * 21);
  CHECK(beta(3, 2, 0) == 1);
}

TEST_CASE("xi row sums and matches counting") {
  for (auto [q, t] : std::vector<std::pair<long, int>>{{2, 4}, {2, 5}, {3, 4}, {2, 6}}) {
    const auto p = SchemeParams::make(q, t);
    const auto counted = oracle::rank_counts(t, q);
    Integer sum = 0;
    for (int i = 0; i <= p.n; ++i) {
      CHECK(xi(p, i) == counted[i]);
      sum += xi(p, i);
    }
    CHECK(sum == p.space_size());
  }
  CHECK(xi(SchemeParams::make(3, 4), 1) == 260);
  CHECK(xi(SchemeParams::make(3, 4), 2) == 468);
  CHECK(xi(SchemeParams::make(3, 4), 3) == 0);
}
