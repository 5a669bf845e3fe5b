// One line per acceptance criterion: "AC<n> PASS|FAIL <title> (<seconds>s): <detail>".

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "skewrank/cli.hpp"
#include "skewrank/codefile.hpp"
#include "skewrank/errors.hpp"
#include "skewrank/homopoly.hpp"
#include "skewrank/krawtchouk.hpp"
#include "skewrank/macwilliams.hpp"
#include "skewrank/moments.hpp"
#include "skewrank/qcalculus.hpp"
#include "skewrank/selftest.hpp"

using namespace skewrank;
using testing::ints;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed sub-checks; the criterion passes when none failed.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string join(const std::vector<Integer>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

const std::vector<std::pair<long, int>> kDeskPairs{{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}};

std::vector<Integer> xi_row(const SchemeParams& p) {
  std::vector<Integer> r;
  for (int i = 0; i <= p.n; ++i) r.push_back(xi(p, i));
  return r;
}

void absorb(Outcome& o, const std::vector<CheckResult>& results) {
  std::uint64_t cases = 0;
  for (const auto& r : results) {
    cases += r.cases;
    o.expect(r.passed, r.group + "/" + r.name + ": " + r.detail);
  }
  o.note(std::to_string(results.size()) + " suite checks over " + std::to_string(cases) + " cases");
}

const std::string kExample = std::string(SKEWRANK_DATA_DIR) + "/example.skc";

void ac1(Outcome& o) {
  const auto start = Clock::now();
  const auto pc = read_code_file(kExample);
  const auto w = weight_distribution(pc.code);
  const double t = seconds_since(start);
  o.expect(w.counts == ints({1, 44, 36}), "library wdist = " + join(w.counts));

  std::ostringstream out, err;
  const int rc = cli::run({"wdist", "--code", kExample}, out, err);
  o.expect(rc == 0, "cli exit " + std::to_string(rc));
  o.expect(out.str() == "{\"q\":3,\"t\":4,\"k\":4,\"dist\":[\"1\",\"44\",\"36\"]}\n", "cli printed " + out.str());
  o.expect(t < 0.1, "wdist took " + std::to_string(t) + "s");
  o.note("wdist (1,44,36) in " + std::to_string(t) + "s");
}

void ac2(Outcome& o) {
  for (auto [q, t] : kDeskPairs) {
    const auto p = SchemeParams::make(q, t);
    const auto start = Clock::now();
    const auto w = weight_distribution(LinearCode::full(make_field(q), p));
    const double secs = seconds_since(start);
    const auto row = xi_row(p);
    o.expect(w.counts == row, "enumerated " + join(w.counts) + " vs xi " + join(row));
    o.expect(oracle::rank_counts(t, q) == row, "kernel-count oracle disagrees for q,t=" + std::to_string(q) + "," +
                                                   std::to_string(t));
    if (q == 3 && t == 5) {
      o.expect(secs < 10, "(3,5) enumeration took " + std::to_string(secs) + "s");
      o.note("(3,5) enumerated in " + std::to_string(secs) + "s");
    }
  }
  const auto p34 = SchemeParams::make(3, 4);
  const auto om = coefficients_at(omega(p34), p34.m);
  o.expect(om == std::vector<Rational>{1, 260, 468}, "omega(3,4) wrong");
}

void ac3(Outcome& o) {
  const auto start = Clock::now();
  const auto c = testing::example_code();
  const auto r = verify_code(c);
  const auto want = ints({1, 8, 0});
  o.expect(r.verdict(), "example verdict false");
  o.expect(r.dual_enumerated.counts == want && r.dual_matrix.counts == want && r.dual_functional.counts == want,
           "example dual routes " + join(r.dual_enumerated.counts) + join(r.dual_matrix.counts) +
               join(r.dual_functional.counts));
  std::vector<oracle::Coords> gens;
  for (const auto& b : c.basis()) gens.push_back(testing::coords_of(b));
  o.expect(oracle::dual_distribution(4, 3, gens) == want, "brute-force dual oracle disagrees on example");

  int total = 0;
  for (auto [q, t] : kDeskPairs) {
    const auto p = SchemeParams::make(q, t);
    const auto f = make_field(q);
    std::mt19937_64 rng(1000 * q + t);
    for (int i = 0; i < 100; ++i) {
      const int k = static_cast<int>(rng() % (p.dimension() + 1));
      const auto code = random_code(f, p, k, rng);
      const auto rep = verify_code(code);
      ++total;
      const std::string tag = "q,t,k=" + std::to_string(q) + "," + std::to_string(t) + "," + std::to_string(k) +
                              " #" + std::to_string(i);
      o.expect(rep.verdict(), tag + " verdict false");
      // Independent dual for a slice of the codes.
      if (i < 5) {
        std::vector<oracle::Coords> g;
        for (const auto& b : code.basis()) g.push_back(testing::coords_of(b));
        o.expect(oracle::dual_distribution(t, q, g) == rep.dual_enumerated.counts, tag + " oracle dual differs");
      }
    }
  }
  const double secs = seconds_since(start);
  o.expect(secs < 60, "suite took " + std::to_string(secs) + "s");
  o.note(std::to_string(total) + " random codes, three routes, " + std::to_string(secs) + "s");
}

void ac4(Outcome& o) {
  const std::vector<std::pair<long, int>> pairs{{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 4}, {5, 4}};
  for (auto [q, t] : pairs) {
    const auto p = SchemeParams::make(q, t);
    const auto [b, c] = skew_parameters(p);
    o.expect(b == q * q && c == qpow(q, p.m - 2 * p.n), "skew parameters");
    const auto P = p_matrix(p);
    for (int x = 0; x <= p.n; ++x) {
      for (int k = 0; k <= p.n; ++k) {
        const Integer sp = skew_p(p, k, x);
        o.expect(sp == skew_c(p, k, x) && Rational(sp) == generalized_p(b, c, k, x, p.n),
                 "forms differ at q,t,k,x=" + std::to_string(q) + "," + std::to_string(t) + "," +
                     std::to_string(k) + "," + std::to_string(x));
      }
    }
    for (int k = 0; k <= p.n; ++k) {
      Integer s = 0;
      for (int x = 0; x <= p.n; ++x) s += xi(p, x) * P.entries[x][k];
      o.expect(s == (k == 0 ? p.space_size() : Integer(0)), "column relation fails at k=" + std::to_string(k));
    }
    if (q == 2 || q == 3 || q == 5) {
      o.expect(oracle::counted_p_matrix(t, q) == P.entries, "character-count oracle disagrees for q,t=" +
                                                                std::to_string(q) + "," + std::to_string(t));
    }
  }
  absorb(o, run_selftest_group("krawtchouk"));
}

void ac5(Outcome& o) {
  const auto start = Clock::now();
  absorb(o, run_selftest_group("combinatorics"));
  absorb(o, run_selftest_group("lambda"));
  for (const auto& r : run_selftest_group("moments")) {
    if (r.name.find("msrd") == std::string::npos) o.expect(r.passed, r.name + ": " + r.detail);
  }
  int count = 0;
  for (long q : {2L, 3L}) {
    for (int phi = 0; phi <= 6; ++phi) {
      for (int j = 0; j <= phi; ++j) {
        for (long lam = 0; lam <= 12; ++lam) {
          try {
            delta_closed(q, lam, phi, j);
            ++count;
            if (lam >= phi) {
              epsilon_closed(q, lam, phi, j);
              ++count;
            }
          } catch (const IdentityViolation& e) {
            o.expect(false, e.what());
          }
        }
      }
    }
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int l = static_cast<int>(rng() % 7);
    std::vector<Rational> b;
    for (int i = 0; i <= l; ++i) b.push_back(Rational(static_cast<long>(rng() % 41) - 20, 1 + rng() % 5));
    for (auto& v : b) v.canonicalize();
    const long q = 2 + static_cast<long>(rng() % 3);
    o.expect(invert_sequence(forward_sequence(b, l, q), l, q) == b, "inversion round trip");
  }
  const double secs = seconds_since(start);
  o.expect(secs < 5, "suite took " + std::to_string(secs) + "s");
  o.note(std::to_string(count) + " delta/epsilon cases, " + std::to_string(secs) + "s");
}

void ac6(Outcome& o) {
  SelftestOptions opts;
  opts.random_pairs = 200;
  absorb(o, run_selftest_group("calculus", opts));
  absorb(o, run_selftest_group("homopoly", opts));
  // Difference quotients evaluated pointwise, independent of the coefficient formulas.
  std::mt19937_64 rng(17);
  int cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const long q = trial % 2 ? 3 : 2;
    const int deg = static_cast<int>(rng() % 5);
    std::vector<Rational> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(Rational(static_cast<long>(rng() % 11) - 5));
    const auto poly = HPoly::from_rationals(q, cs);
    const auto g = HPoly::from_rationals(q, {Rational(static_cast<long>(rng() % 5) + 1), Rational(-2)});
    const auto fg = skew_q_product(poly, g);
    const oracle::Fn2 f = [&](const Rational& x, const Rational& y) { return evaluate(fg, x, y, 5); };
    const Rational x(3, 2), y(5);
    for (int phi = 0; phi <= fg.degree(); ++phi) {
      o.expect(evaluate(leibniz_q(poly, g, phi), x, y, 5) == oracle::x_difference(f, q, phi, x, y),
               "Leibniz (X) vs difference quotient, trial " + std::to_string(trial));
      o.expect(evaluate(leibniz_q_inv(poly, g, phi), x, y, 5) == oracle::y_difference(f, q, phi, x, y),
               "Leibniz (Y) vs difference quotient, trial " + std::to_string(trial));
      cases += 2;
    }
  }
  o.note(std::to_string(cases) + " difference-quotient comparisons");
}

void ac7(Outcome& o) {
  const auto p = SchemeParams::make(3, 4);
  const WeightDist w{p, ints({1, 44, 36})}, wd{p, ints({1, 8, 0})};
  o.expect(check_first_moment(w, wd, 1) == Sides{54, 54}, "first moment at phi=1");
  o.expect(check_second_moment(w, wd, 1, 4) == Sides{756, 756}, "second moment at phi=1");
  int cases = 0;
  for (auto [q, t] : kDeskPairs) {
    const auto sp = SchemeParams::make(q, t);
    const auto f = make_field(q);
    std::mt19937_64 rng(2000 * q + t);
    for (int i = 0; i < 40; ++i) {
      const auto code = random_code(f, sp, static_cast<int>(rng() % (sp.dimension() + 1)), rng);
      const auto rep = verify_code(code);
      if (!rep.verdict()) {
        o.expect(false, "unverified code");
        continue;
      }
      for (int phi = 0; phi <= sp.n; ++phi) {
        const auto m1 = check_first_moment(rep.w, rep.dual_enumerated, phi);
        const auto m2 = check_second_moment(rep.w, rep.dual_enumerated, phi, code.dimension());
        o.expect(m1.first == m1.second && m2.first == m2.second, "moment mismatch at phi=" + std::to_string(phi));
        cases += 2;
      }
      for (const auto& c : corollary_bounds(rep.w, min_distance(rep.dual_enumerated), diameter(rep.dual_enumerated))) {
        o.expect(c.holds(), c.clause + " corollary at phi=" + std::to_string(c.phi));
        ++cases;
      }
    }
  }
  o.note("54 and 756 reproduced; " + std::to_string(cases) + " moment/corollary checks on 200 codes");
}

void ac8(Outcome& o) {
  const auto p24 = SchemeParams::make(2, 4);
  const auto found = find_msrd(make_field(2), p24, 2);
  if (found) {
    o.expect(weight_distribution(*found).counts == ints({1, 0, 7}), "found code has the wrong distribution");
  } else {
    o.expect(false,
             "find_msrd(2,4,2) found no code; exhaustive census: " +
                 [] {
                   const auto c = oracle::binary_subspace_census(4, 3);
                   return std::to_string(c.all_nonzero_full_rank) + " of " + std::to_string(c.subspaces) +
                          " three-dimensional subspaces of A_{2,4} have all nonzero words of skew rank 2";
                 }());
  }
  o.expect(msrd_distribution(p24, 2).counts == ints({1, 0, 7}), "msrd_distribution(2,4,2)");
  const auto p34 = SchemeParams::make(3, 4);
  o.expect(msrd_distribution(p34, 1).counts == xi_row(p34), "msrd_distribution(3,4,1) vs omega");

  for (auto [q, t, d] : std::vector<std::tuple<long, int, int>>{{2, 5, 2}, {3, 5, 2}, {2, 5, 1}, {2, 3, 1}}) {
    const auto p = SchemeParams::make(q, t);
    const auto c = find_msrd(make_field(q), p, d);
    const std::string tag = "(" + std::to_string(q) + "," + std::to_string(t) + "," + std::to_string(d) + ")";
    if (!c) {
      o.expect(false, "no code found for " + tag);
      continue;
    }
    const auto w = weight_distribution(*c);
    const auto wd = weight_distribution(dual(*c));
    o.expect(w.counts == msrd_distribution(p, d).counts, tag + " distribution");
    const int dd = min_distance(wd).value_or(p.n + 1);
    o.expect(dd == p.n - d + 2, tag + " dual distance " + std::to_string(dd));
    o.expect(wd.counts == msrd_distribution(p, p.n - d + 2).counts, tag + " dual distribution");
    o.note("dual-MSRD confirmed on " + tag);
  }
  // Singleton bound on every random code the suite generates.
  int touched = 0;
  for (auto [q, t] : kDeskPairs) {
    const auto p = SchemeParams::make(q, t);
    const auto f = make_field(q);
    std::mt19937_64 rng(3000 * q + t);
    for (int i = 0; i < 20; ++i) {
      const auto c = random_code(f, p, static_cast<int>(rng() % (p.dimension() + 1)), rng);
      const auto d = min_distance(weight_distribution(c));
      if (d) o.expect(singleton_holds(p, c.size(), *d), "Singleton bound violated");
      ++touched;
    }
  }
  o.note("Singleton bound on " + std::to_string(touched) + " random codes");
}

void ac9(Outcome& o) {
  // Beyond desk scale the enumeration guard refuses instead of running.
  const auto big = SchemeParams::make(2, 12);
  bool refused = false;
  try {
    weight_distribution(LinearCode::full(make_field(2), big));
  } catch (const BudgetExceeded&) {
    refused = true;
  }
  o.expect(refused, "full (2,12) enumeration was not refused");
  refused = false;
  try {
    find_msrd(make_field(3), SchemeParams::make(3, 8), 2);
  } catch (const BudgetExceeded&) {
    refused = true;
  }
  o.expect(refused, "find_msrd (3,8,2) was not refused");
  // Closed forms stay exact at any size.
  for (auto [q, t] : std::vector<std::pair<long, int>>{{7, 12}, {5, 11}, {16, 9}}) {
    const auto p = SchemeParams::make(q, t);
    Integer s = 0;
    for (const auto& v : xi_row(p)) s += v;
    o.expect(s == p.space_size(), "omega row sum at q,t=" + std::to_string(q) + "," + std::to_string(t));
    const auto P = p_matrix(p);
    for (int k = 1; k <= p.n; ++k) {
      Integer c = 0;
      for (int x = 0; x <= p.n; ++x) c += xi(p, x) * P.entries[x][k];
      o.expect(c == 0, "column relation at scale");
    }
  }
  o.note("enumeration beyond budget refused; closed forms exact up to q=16, t=12");
}

struct Criterion {
  const char* title;
  std::function<void(Outcome&)> fn;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"example reproduction", ac1},       {"count reproduction", ac2},   {"three-way MacWilliams agreement", ac3},
      {"Krawtchouk equivalences", ac4},    {"identity suite", ac5},       {"calculus suite", ac6},
      {"moments", ac7},                    {"MSRD", ac8},                 {"scope beyond desk scale", ac9},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "--only must be 1.." << criteria.size() << "\n";
    return 2;
  }
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    const auto start = Clock::now();
    try {
      criteria[i].fn(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(start);
    const bool ok = o.failures.empty();
    failed += !ok;
    std::cout << "AC" << i + 1 << " " << (ok ? "PASS" : "FAIL") << " " << criteria[i].title << " (" << std::fixed
              << std::setprecision(2) << secs << "s)";
    const auto& lines = ok ? o.notes : o.failures;
    for (size_t j = 0; j < lines.size() && j < 5; ++j) std::cout << (j ? "; " : ": ") << lines[j];
    if (lines.size() > 5) std::cout << "; ... " << lines.size() - 5 << " more";
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
