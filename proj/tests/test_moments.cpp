#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "skewrank/macwilliams.hpp"
#include "skewrank/moments.hpp"

using namespace skewrank;
using testing::ints;

TEST_CASE("moments of the example pair") {
  const auto p = SchemeParams::make(3, 4);
  const WeightDist w{p, ints({1, 44, 36})}, wd{p, ints({1, 8, 0})};
  CHECK(check_first_moment(w, wd, 1) == Sides{54, 54});
  CHECK(check_first_moment(w, wd, 2) == Sides{1, 1});
  CHECK(check_first_moment(w, wd, 0).first == 81);
  CHECK(check_second_moment(w, wd, 1, 4) == Sides{756, 756});
  CHECK(check_second_moment(w, wd, 0, 4) == Sides{81, 81});
  // k inferred from the distribution total.
  CHECK(check_second_moment(w, wd, 1, std::nullopt) == Sides{756, 756});
}

TEST_CASE("corollaries") {
  const auto p = SchemeParams::make(3, 4);
  const WeightDist w{p, ints({1, 44, 36})}, wd{p, ints({1, 8, 0})};
  const auto checks = corollary_bounds(w, min_distance(wd), diameter(wd));
  CHECK_FALSE(checks.empty());
  for (const auto& c : checks) CHECK(c.holds());
}

TEST_CASE("delta and epsilon") {
  CHECK(delta_closed(2, 6, 2, 0) == gamma(2, 6, 2));
  CHECK(epsilon_closed(2, 4, 2, 0) == gauss(2, 4, 2));
  for (long q : {2L, 3L})
    for (int phi = 0; phi <= 4; ++phi)
      for (int j = 0; j <= phi; ++j)
        for (long lam = 2 * j; lam <= 10; ++lam) CHECK_NOTHROW(delta_closed(q, lam, phi, j));
  CHECK_NOTHROW(epsilon_closed(2, 4, 2, 1));
  CHECK_NOTHROW(epsilon_closed(3, 3, 3, 2));
}

TEST_CASE("sequence inversion") {
  const std::vector<Rational> b{3, -1, Rational(2, 5), 0, 7};
  const auto a = forward_sequence(b, 4, 3);
  CHECK(invert_sequence(a, 4, 3) == b);
  const std::vector<Rational> e0{1, 0, 0};
  CHECK(invert_sequence(forward_sequence(e0, 2, 2), 2, 2) == e0);
}

TEST_CASE("mds-like distributions") {
  const auto p34 = SchemeParams::make(3, 4);
  CHECK(msrd_distribution(p34, 1).counts == ints({1, 260, 468}));
  CHECK(msrd_distribution(SchemeParams::make(2, 4), 2).counts == ints({1, 0, 7}));
  CHECK(msrd_distribution(p34, 3).counts == ints({1, 0, 0}));
  CHECK_THROWS_AS(msrd_distribution(p34, 0), std::invalid_argument);
  for (auto [q, t] : std::vector<std::pair<long, int>>{{2, 5}, {3, 5}, {2, 7}, {3, 6}}) {
    const auto p = SchemeParams::make(q, t);
    for (int d = 1; d <= p.n + 1; ++d) {
      const auto w = msrd_distribution(p, d);
      CHECK(w.total() == ipow(q, static_cast<unsigned long>(p.m * (p.n - d + 1))));
      CHECK(singleton_holds(p, w.total(), d));
      CHECK(transform_matrix(w, w.total()).counts == msrd_distribution(p, p.n - d + 2).counts);
    }
  }
}

TEST_CASE("search finds codes for odd t") {
  for (auto [q, t, d] : std::vector<std::tuple<long, int, int>>{{2, 5, 2}, {3, 5, 2}, {2, 3, 1}}) {
    const auto p = SchemeParams::make(q, t);
    const auto c = find_msrd(make_field(q), p, d);
    REQUIRE(c);
    CHECK(weight_distribution(*c).counts == msrd_distribution(p, d).counts);
    CHECK(weight_distribution(dual(*c)).counts == msrd_distribution(p, p.n - d + 2).counts);
  }
  CHECK_THROWS_AS(find_msrd(make_field(2), SchemeParams::make(2, 4), 3), std::invalid_argument);
}

TEST_CASE("no linear code with q=2 t=4 d=2 exists") {
  const auto census = oracle::binary_subspace_census(4, 3);
  CHECK(census.subspaces == 1395);
  CHECK(census.all_nonzero_full_rank == 0);
  MsrdSearchOptions o;
  o.max_trials = 2000;
  CHECK_FALSE(find_msrd(make_field(2), SchemeParams::make(2, 4), 2, o));
}
