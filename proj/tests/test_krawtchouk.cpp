#include <doctest.h>

#include "oracles.hpp"
#include "skewrank/krawtchouk.hpp"

using namespace skewrank;

TEST_CASE("eigenmatrix agrees with character counting") {
  for (auto [q, t] : std::vector<std::pair<long, int>>{{2, 4}, {2, 5}, {3, 4}, {2, 6}, {3, 5}}) {
    const auto params = SchemeParams::make(q, t);
    const auto P = p_matrix(params);
    const auto counted = oracle::counted_p_matrix(t, q);
    CAPTURE(q);
    CAPTURE(t);
    CHECK(P.entries == counted);
  }
}

TEST_CASE("three forms of the polynomial agree") {
  for (auto [q, t] : std::vector<std::pair<long, int>>{{2, 4}, {3, 5}, {4, 4}, {5, 4}}) {
    const auto params = SchemeParams::make(q, t);
    const auto [b, c] = skew_parameters(params);
    CHECK(b == q * q);
    for (int x = 0; x <= params.n; ++x) {
      for (int k = 0; k <= params.n; ++k) {
        CHECK(skew_p(params, k, x) == skew_c(params, k, x));
        CHECK(Rational(skew_p(params, k, x)) == generalized_p(b, c, k, x, params.n));
      }
    }
  }
}

TEST_CASE("known table for q=3 t=4") {
  const auto P = p_matrix(SchemeParams::make(3, 4));
  using V = std::vector<Integer>;
  CHECK(P.entries[0] == V{1, 260, 468});
  CHECK(P.entries[1] == V{1, 17, -18});
  CHECK(P.entries[2] == V{1, -10, 9});
}

TEST_CASE("index errors") {
  const auto params = SchemeParams::make(2, 4);
  CHECK_THROWS_AS(skew_p(params, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(skew_c(params, 0, -1), std::out_of_range);
}
