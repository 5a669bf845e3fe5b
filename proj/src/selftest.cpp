#include "skewrank/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "skewrank/codefile.hpp"
#include "skewrank/homopoly.hpp"
#include "skewrank/krawtchouk.hpp"
#include "skewrank/macwilliams.hpp"
#include "skewrank/moments.hpp"
#include "skewrank/qcalculus.hpp"

namespace skewrank {

namespace {

class Check {
 public:
  Check(std::string group, std::string name) {
    r_.group = std::move(group);
    r_.name = std::move(name);
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = describe();
    }
  }

  void fail(const std::string& why) {
    r_.passed = false;
    if (r_.detail.empty()) r_.detail = why;
  }

  CheckResult result() const { return r_; }

 private:
  CheckResult r_;
};

using Body = std::function<void(Check&)>;

CheckResult run_check(const std::string& group, const std::string& name, const Body& body) {
  Check c(group, name);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  return c.result();
}

std::string args(std::initializer_list<long> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (long x : xs) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ")";
  return os.str();
}

Rational sgn(long parity, const Rational& v) { return parity % 2 ? Rational(-v) : v; }

LambdaScalar random_scalar(long q, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), count(0, 3), expo(-1, 2);
  std::map<int, Rational> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms[expo(rng)] += ratio(num(rng), den(rng));
  return LambdaScalar(q, terms);
}

HPoly random_poly(long q, int degree, std::mt19937_64& rng) {
  std::vector<LambdaScalar> cs;
  for (int i = 0; i <= degree; ++i) cs.push_back(random_scalar(q, rng));
  return HPoly(q, cs);
}

// f / X for f with no pure Y^r term.
HPoly divide_by_x(const HPoly& f) {
  std::vector<LambdaScalar> cs(f.coeffs().begin(), f.coeffs().end() - 1);
  return HPoly(f.q(), cs);
}

// f / Y for f with no pure X^r term.
HPoly divide_by_y(const HPoly& f) {
  std::vector<LambdaScalar> cs(f.coeffs().begin() + 1, f.coeffs().end());
  return HPoly(f.q(), cs);
}

// f(X, q^2 Y).
HPoly scale_y(const HPoly& f) {
  HPoly out = f;
  for (int i = 0; i <= f.degree(); ++i) out.set_coeff(i, f.coeff(i) * qpow(f.q(), 2L * i));
  return out;
}

std::vector<Integer> xi_row(const SchemeParams& p) {
  std::vector<Integer> out;
  for (long s = 0; s <= p.n; ++s) out.push_back(xi(p, s));
  return out;
}

const std::vector<std::pair<long, int>> kKrawtchoukParams = {{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 4}, {5, 4}};
const std::vector<std::pair<long, int>> kCodeParams = {{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}};

std::vector<CheckResult> combinatorics(const SelftestOptions&) {
  const std::string g = "combinatorics";
  std::vector<CheckResult> out;
  const std::vector<long> qs = {2, 3, 4, 5};
  out.push_back(run_check(g, "gauss symmetry", [&](Check& c) {
    for (long q : qs)
      for (long x = 0; x <= 12; ++x)
        for (long k = 0; k <= x; ++k)
          c.expect(gauss(q, x, k) == gauss(q, x, x - k), [&] { return "q,x,k=" + args({q, x, k}); });
  }));
  out.push_back(run_check(g, "gauss swap places", [&](Check& c) {
    for (long q : qs)
      for (long x = 0; x <= 12; ++x)
        for (long i = 0; i <= x; ++i)
          for (long k = 0; k <= x; ++k)
            c.expect(gauss(q, x, i) * gauss(q, x - i, k) == gauss(q, x, k) * gauss(q, x - k, i),
                     [&] { return "q,x,i,k=" + args({q, x, i, k}); });
  }));
  out.push_back(run_check(g, "product expansion", [&](Check& c) {
    for (long q : qs)
      for (long lam = 0; lam <= 6; ++lam)
        for (long x = 0; x <= 8; ++x) {
          const Rational y = qpow(q, lam);
          Rational prod = 1, sum = 0;
          for (long i = 0; i < x; ++i) prod *= y - qpow(q, 2 * i);
          for (long k = 0; k <= x; ++k) sum += sgn(x - k, qpow(q, 2 * sigma(x - k)) * gauss(q, x, k) * rpow(y, k));
          c.expect(prod == sum, [&] { return "q,lambda,x=" + args({q, lam, x}); });
        }
  }));
  out.push_back(run_check(g, "product to sum", [&](Check& c) {
    for (long q : qs)
      for (long lam = 0; lam <= 6; ++lam)
        for (long x = 0; x <= 8; ++x) {
          const Rational y = qpow(q, lam);
          Rational sum = 0;
          for (long k = 0; k <= x; ++k) {
            Rational prod = 1;
            for (long i = 0; i < k; ++i) prod *= y - qpow(q, 2 * i);
            sum += gauss(q, x, k) * prod;
          }
          c.expect(sum == rpow(y, x), [&] { return "q,lambda,x=" + args({q, lam, x}); });
        }
  }));
  out.push_back(run_check(g, "delta identity", [&](Check& c) {
    for (long q : qs)
      for (long j = 0; j <= 10; ++j)
        for (long i = 0; i <= j; ++i) {
          Rational s = 0;
          for (long k = i; k <= j; ++k) s += sgn(k - i, qpow(q, 2 * sigma(k - i)) * gauss(q, k, i) * gauss(q, j, k));
          c.expect(s == (i == j ? 1 : 0), [&] { return "q,i,j=" + args({q, i, j}); });
        }
  }));
  out.push_back(run_check(g, "pascal and ratio identities", [&](Check& c) {
    for (long q : qs)
      for (long x = 1; x <= 12; ++x)
        for (long k = 1; k <= x; ++k) {
          const Rational gxk = gauss(q, x, k);
          const auto where = [&] { return "q,x,k=" + args({q, x, k}); };
          c.expect(gxk == gauss(q, x - 1, k) + qpow(q, 2 * (x - k)) * gauss(q, x - 1, k - 1), where);
          c.expect(gxk == gauss(q, x - 1, k - 1) + qpow(q, 2 * k) * gauss(q, x - 1, k), where);
          c.expect(gxk == (qpow(q, 2 * (x - k + 1)) - 1) / (qpow(q, 2 * k) - 1) * gauss(q, x, k - 1), where);
          if (k < x) c.expect(gxk == (qpow(q, 2 * x) - 1) / (qpow(q, 2 * (x - k)) - 1) * gauss(q, x - 1, k), where);
          c.expect(gauss(q, x - 1, k - 1) == (qpow(q, 2 * k) - 1) / (qpow(q, 2 * x) - 1) * gxk, where);
        }
  }));
  out.push_back(run_check(g, "gamma identities", [&](Check& c) {
    for (long q : qs)
      for (long x = -4; x <= 12; ++x)
        for (long k = 0; k <= 6; ++k) {
          const auto where = [&] { return "q,x,k=" + args({q, x, k}); };
          Rational prod = 1;
          for (long i = 0; i < k; ++i) prod *= qpow(q, x - 2 * i) - 1;
          c.expect(gamma(q, x, k) == qpow(q, k * (k - 1)) * prod, where);
          c.expect(gamma(q, x + 2, k + 1) == (qpow(q, x + 2) - 1) * qpow(q, 2 * k) * gamma(q, x, k), where);
          c.expect(gamma(q, x, k + 1) == (qpow(q, x) - qpow(q, 2 * k)) * gamma(q, x, k), where);
          if (x >= 0) {
            Rational num = 1, den = 1;
            for (long i = 0; i < k; ++i) num *= qpow(q, 2 * x - 2 * i) - 1;
            for (long i = 1; i <= k; ++i) den *= qpow(q, 2 * i) - 1;
            c.expect(gamma(q, 2 * x, k) / gamma(q, 2 * k, k) == gauss(q, x, k) && gauss(q, x, k) == num / den, where);
          }
        }
  }));
  out.push_back(run_check(g, "beta identities", [&](Check& c) {
    for (long q : qs)
      for (long x = 0; x <= 12; ++x)
        for (long k = 0; k <= x; ++k) {
          const auto where = [&] { return "q,x,k=" + args({q, x, k}); };
          c.expect(beta(q, x, k) == gauss(q, x, k) * beta(q, k, k), where);
          c.expect(beta(q, x, x) == gauss(q, x, k) * beta(q, k, k) * beta(q, x - k, x - k), where);
        }
  }));
  out.push_back(run_check(g, "form counts", [&](Check& c) {
    for (long q : qs)
      for (int t = 2; t <= 7; ++t) {
        const auto p = SchemeParams::make(q, t);
        Integer total = 0;
        for (long s = 0; s <= p.n; ++s) {
          total += xi(p, s);
          c.expect(Rational(xi(p, s)) == gauss(q, p.n, s) * gamma(q, p.m, s), [&] { return "q,t,s=" + args({q, t, s}); });
        }
        c.expect(total == p.space_size(), [&] { return "sum for q,t=" + args({q, t}); });
      }
  }));
  return out;
}

std::vector<CheckResult> lambda_group(const SelftestOptions& o) {
  const std::string g = "lambda";
  std::vector<CheckResult> out;
  out.push_back(run_check(g, "shift against evaluation", [&](Check& c) {
    std::mt19937_64 rng(o.seed);
    for (long q : {2L, 3L, 5L})
      for (int trial = 0; trial < 20; ++trial) {
        const LambdaScalar s = random_scalar(q, rng);
        for (int j = -4; j <= 4; ++j)
          for (long lam = -10; lam <= 10; ++lam)
            c.expect(eval_lambda(shift(s, j), lam) == eval_lambda(s, lam - 2 * j),
                     [&] { return s.to_string() + " j,lambda=" + args({j, lam}); });
      }
  }));
  out.push_back(run_check(g, "shift is a ring homomorphism", [&](Check& c) {
    std::mt19937_64 rng(o.seed + 1);
    for (long q : {2L, 3L})
      for (int trial = 0; trial < 50; ++trial) {
        const LambdaScalar a = random_scalar(q, rng), b = random_scalar(q, rng);
        for (int j = -3; j <= 3; ++j) {
          c.expect(shift(a * b, j) == shift(a, j) * shift(b, j), [&] { return "product"; });
          c.expect(shift(a + b, j) == shift(a, j) + shift(b, j), [&] { return "sum"; });
          c.expect(shift(shift(a, j), 2) == shift(a, j + 2), [&] { return "composition"; });
        }
      }
  }));
  out.push_back(run_check(g, "gamma in lambda", [&](Check& c) {
    for (long q : {2L, 3L, 4L})
      for (long k = 0; k <= 6; ++k)
        for (long x = 0; x <= 12; ++x)
          c.expect(eval_lambda(gamma_lambda(q, k), x) == gamma(q, x, k), [&] { return "q,k,x=" + args({q, k, x}); });
  }));
  return out;
}

std::vector<CheckResult> homopoly_group(const SelftestOptions& o) {
  const std::string g = "homopoly";
  std::vector<CheckResult> out;
  out.push_back(run_check(g, "closed forms of mu and nu powers", [&](Check& c) {
    for (long q : {2L, 3L, 4L})
      for (int k = 0; k <= 6; ++k) {
        c.expect(mu_power(q, k) == skew_q_power(mu(q), k), [&] { return "mu q,k=" + args({q, k}); });
        c.expect(nu_power(q, k) == skew_q_power(nu(q), k), [&] { return "nu q,k=" + args({q, k}); });
      }
  }));
  out.push_back(run_check(g, "associativity", [&](Check& c) {
    std::mt19937_64 rng(o.seed + 2);
    std::uniform_int_distribution<int> deg(0, 4);
    for (long q : {2L, 3L})
      for (int trial = 0; trial < 30; ++trial) {
        const HPoly a = random_poly(q, deg(rng), rng), b = random_poly(q, deg(rng), rng), d = random_poly(q, deg(rng), rng);
        c.expect(skew_q_product(skew_q_product(a, b), d) == skew_q_product(a, skew_q_product(b, d)),
                 [&] { return a.to_string() + " | " + b.to_string() + " | " + d.to_string(); });
      }
  }));
  out.push_back(run_check(g, "whole-space enumerator", [&](Check& c) {
    for (long q : {2L, 3L, 4L, 5L})
      for (int t = 2; t <= 7; ++t) {
        const auto p = SchemeParams::make(q, t);
        const HPoly w = omega(p);
        c.expect(evaluate(w, 1, 1, p.m) == Rational(p.space_size()), [&] { return "q,t=" + args({q, t}); });
        c.expect(coefficients_at(w, p.m) == coefficients_at(mu_power(q, p.n), p.m), [&] { return "q,t=" + args({q, t}); });
      }
  }));
  out.push_back(run_check(g, "product with mu powers at ones", [&](Check& c) {
    std::mt19937_64 rng(o.seed + 3);
    std::uniform_int_distribution<int> deg(0, 4);
    for (long q : {2L, 3L})
      for (int trial = 0; trial < 10; ++trial) {
        const HPoly rho = random_poly(q, deg(rng), rng);
        for (int s = 0; s <= 4; ++s) {
          const HPoly prod = skew_q_product(rho, mu_power(q, s));
          for (long lam = 0; lam <= 8; ++lam)
            c.expect(evaluate(prod, 1, 1, lam) == qpow(q, lam * s) * evaluate(rho, 1, 1, lam),
                     [&] { return rho.to_string() + " s,lambda=" + args({s, lam}); });
        }
      }
  }));
  return out;
}

std::vector<CheckResult> krawtchouk_group(const SelftestOptions&) {
  const std::string g = "krawtchouk";
  std::vector<CheckResult> out;
  out.push_back(run_check(g, "explicit, skew and generalized forms agree", [&](Check& c) {
    for (auto [q, t] : kKrawtchoukParams) {
      const auto p = SchemeParams::make(q, t);
      const auto [b, cc] = skew_parameters(p);
      for (long x = 0; x <= p.n; ++x)
        for (long k = 0; k <= p.n; ++k) {
          const Integer sp = skew_p(p, k, x);
          c.expect(skew_c(p, k, x) == sp && generalized_p(b, cc, k, x, p.n) == Rational(sp),
                   [&] { return "q,t,k,x=" + args({q, t, k, x}); });
        }
    }
  }));
  out.push_back(run_check(g, "recurrence across n", [&](Check& c) {
    for (long q : {2L, 3L, 4L})
      for (int t = 2; t <= 6; ++t) {
        const auto p = SchemeParams::make(q, t);
        const auto p2 = SchemeParams::make(q, t + 2);
        const long n = p.n;
        const auto C = [&](long k, long x) { return k > n ? Integer(0) : skew_c(p, k, x); };
        for (long x = 0; x <= n; ++x)
          for (long k = 0; k <= n; ++k) {
            const Integer lhs = skew_c(p2, k + 1, x + 1);
            const Integer rhs = ipow(q, 2 * (k + 1)) * C(k + 1, x) - ipow(q, 2 * k) * C(k, x);
            c.expect(lhs == rhs, [&] { return "q,t,k,x=" + args({q, t, k, x}); });
          }
      }
  }));
  out.push_back(run_check(g, "recurrence of the generalized form", [&](Check& c) {
    for (long q : {2L, 3L})
      for (int t : {4, 5}) {
        const auto [b, cc] = skew_parameters(SchemeParams::make(q, t));
        for (long y = 1; y <= 4; ++y)
          for (long x = 0; x <= y; ++x)
            for (long k = 0; k < y; ++k) {
              const Rational lhs = generalized_p(b, cc, k + 1, x + 1, y + 1);
              const Rational rhs = rpow(b, k + 1) * generalized_p(b, cc, k + 1, x, y) - rpow(b, k) * generalized_p(b, cc, k, x, y);
              c.expect(lhs == rhs, [&] { return "q,t,y,k,x=" + args({q, t, y, k, x}); });
            }
      }
  }));
  out.push_back(run_check(g, "column relation", [&](Check& c) {
    for (auto [q, t] : kKrawtchoukParams) {
      const auto p = SchemeParams::make(q, t);
      for (long k = 0; k <= p.n; ++k) {
        Integer s = 0;
        for (long x = 0; x <= p.n; ++x) s += xi(p, x) * skew_p(p, k, x);
        c.expect(s == (k == 0 ? p.space_size() : Integer(0)), [&] { return "q,t,k=" + args({q, t, k}); });
      }
    }
  }));
  out.push_back(run_check(g, "first row counts forms", [&](Check& c) {
    for (auto [q, t] : kKrawtchoukParams) {
      const auto p = SchemeParams::make(q, t);
      const auto P = p_matrix(p);
      for (long k = 0; k <= p.n; ++k) {
        c.expect(P.entries[0][static_cast<size_t>(k)] == xi(p, k), [&] { return "q,t,k=" + args({q, t, k}); });
        c.expect(P.entries[static_cast<size_t>(k)][0] == 1, [&] { return "q,t,x=" + args({q, t, k}); });
      }
    }
  }));
  return out;
}

std::vector<CheckResult> calculus_group(const SelftestOptions& o) {
  const std::string g = "calculus";
  std::vector<CheckResult> out;
  out.push_back(run_check(g, "leibniz rule, skew-q-derivative", [&](Check& c) {
    std::mt19937_64 rng(o.seed + 4);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int trial = 0; trial < o.random_pairs; ++trial) {
      const long q = trial % 2 ? 3 : 2;
      const HPoly f = random_poly(q, deg(rng), rng), h = random_poly(q, deg(rng), rng);
      const HPoly fh = skew_q_product(f, h);
      for (int phi = 0; phi <= 6 && phi <= fh.degree(); ++phi)
        c.expect(q_derivative(fh, phi) == leibniz_q(f, h, phi), [&] { return f.to_string() + " | " + h.to_string(); });
    }
  }));
  out.push_back(run_check(g, "leibniz rule, skew-q^-1-derivative", [&](Check& c) {
    std::mt19937_64 rng(o.seed + 5);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int trial = 0; trial < o.random_pairs; ++trial) {
      const long q = trial % 2 ? 3 : 2;
      const HPoly f = random_poly(q, deg(rng), rng), h = random_poly(q, deg(rng), rng);
      const HPoly fh = skew_q_product(f, h);
      for (int phi = 0; phi <= 6 && phi <= fh.degree(); ++phi)
        c.expect(q_inv_derivative(fh, phi) == leibniz_q_inv(f, h, phi), [&] { return f.to_string() + " | " + h.to_string(); });
    }
  }));
  out.push_back(run_check(g, "derivatives of mu and nu powers", [&](Check& c) {
    for (long q : {2L, 3L, 4L})
      for (int k = 0; k <= 6; ++k)
        for (int phi = 0; phi <= k; ++phi) {
          const auto where = [&] { return "q,k,phi=" + args({q, k, phi}); };
          c.expect(q_derivative(mu_power(q, k), phi) == mu_power_derivative(q, k, phi), where);
          c.expect(q_derivative(nu_power(q, k), phi) == nu_power_derivative(q, k, phi), where);
          c.expect(q_inv_derivative(mu_power(q, k), phi) == mu_power_inv_derivative(q, k, phi), where);
          c.expect(q_inv_derivative(nu_power(q, k), phi) == nu_power_inv_derivative(q, k, phi), where);
        }
  }));
  out.push_back(run_check(g, "nu derivative at ones", [&](Check& c) {
    for (long q : {2L, 3L, 4L})
      for (int j = 0; j <= 6; ++j)
        for (int l = 0; l <= j; ++l) {
          eval_nu_derivative_at_ones(q, j, l);
          c.expect(true, [] { return std::string(); });
        }
  }));
  out.push_back(run_check(g, "division by X and Y", [&](Check& c) {
    std::mt19937_64 rng(o.seed + 6);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
      const long q = trial % 2 ? 3 : 2;
      HPoly u = random_poly(q, deg(rng), rng), v = random_poly(q, deg(rng), rng);
      const auto where = [&] { return u.to_string() + " | " + v.to_string(); };
      HPoly ux = u, vx = v, uy = u, vy = v;
      ux.set_coeff(u.degree(), LambdaScalar(q, Rational(0)));
      vx.set_coeff(v.degree(), LambdaScalar(q, Rational(0)));
      uy.set_coeff(0, LambdaScalar(q, Rational(0)));
      vy.set_coeff(0, LambdaScalar(q, Rational(0)));
      c.expect(divide_by_x(skew_q_product(ux, v)) == skew_q_product(divide_by_x(ux), v), where);
      c.expect(divide_by_x(skew_q_product(u, vx)) == skew_q_product(scale_y(u), divide_by_x(vx)), where);
      c.expect(divide_by_y(skew_q_product(uy, v)) == qpow(q, 2L * v.degree()) * skew_q_product(divide_by_y(uy), shift(v, 1)), where);
      c.expect(divide_by_y(skew_q_product(u, vy)) == skew_q_product(scale_y(u), divide_by_y(vy)), where);
    }
  }));
  return out;
}

std::vector<CheckResult> moments_group(const SelftestOptions&) {
  const std::string g = "moments";
  std::vector<CheckResult> out;
  out.push_back(run_check(g, "delta closed form", [&](Check& c) {
    for (long q : {2L, 3L})
      for (int phi = 0; phi <= 6; ++phi)
        for (int j = 0; j <= phi; ++j)
          for (long lam = 0; lam <= 12; ++lam) {
            delta_closed(q, lam, phi, j);
            c.expect(true, [] { return std::string(); });
          }
  }));
  out.push_back(run_check(g, "epsilon closed form", [&](Check& c) {
    for (long q : {2L, 3L})
      for (int phi = 0; phi <= 6; ++phi)
        for (int i = 0; i <= phi; ++i)
          for (long Lam = phi; Lam <= 12; ++Lam) {
            epsilon_closed(q, Lam, phi, i);
            c.expect(true, [] { return std::string(); });
          }
  }));
  out.push_back(run_check(g, "sequence inversion", [&](Check& c) {
    for (long q : {2L, 3L, 4L})
      for (int l = 0; l <= 6; ++l) {
        std::vector<Rational> b;
        for (int i = 0; i <= l; ++i) b.push_back(ratio(3 * i * i - 7 * i + 2, i + 1));
        c.expect(invert_sequence(forward_sequence(b, l, q), l, q) == b, [&] { return "q,l=" + args({q, l}); });
        c.expect(forward_sequence(invert_sequence(b, l, q), l, q) == b, [&] { return "q,l=" + args({q, l}); });
      }
  }));
  out.push_back(run_check(g, "MSRD distributions", [&](Check& c) {
    for (long q : {2L, 3L, 4L})
      for (int t = 2; t <= 7; ++t) {
        const auto p = SchemeParams::make(q, t);
        c.expect(msrd_distribution(p, 1).counts == xi_row(p), [&] { return "d=1 q,t=" + args({q, t}); });
        for (int d = 1; d <= p.n + 1; ++d) {
          const WeightDist w = msrd_distribution(p, d);
          const auto where = [&] { return "q,t,d=" + args({q, t, d}); };
          c.expect(w.total() == ipow(q, static_cast<unsigned long>(p.m * (p.n - d + 1))), where);
          if (d <= p.n) {
            const WeightDist wd = msrd_distribution(p, p.n - d + 2);
            c.expect(transform_matrix(w, w.total()) == wd, where);
            for (int phi = 0; phi <= p.n; ++phi) {
              const auto m1 = check_first_moment(w, wd, phi);
              const auto m2 = check_second_moment(w, wd, phi);
              c.expect(m1.first == m1.second && m2.first == m2.second, where);
            }
          }
        }
      }
  }));
  return out;
}

std::vector<CheckResult> codes_group(const SelftestOptions& o) {
  const std::string g = "codes";
  std::vector<CheckResult> out;
  out.push_back(run_check(g, "worked example", [&](Check& c) {
    const auto pc = parse_code("q=3 t=4 k=4\n1 0 0 0 0 0\n0 1 0 0 0 0\n0 0 1 0 0 0\n0 0 0 0 0 1\n");
    const auto r = verify_code(pc.code, o.enumeration);
    const std::vector<Integer> w{1, 44, 36}, wd{1, 8, 0};
    c.expect(r.w.counts == w, [] { return std::string("distribution"); });
    c.expect(r.verdict() && r.dual_enumerated.counts == wd, [] { return std::string("dual distribution"); });
    c.expect(check_first_moment(r.w, r.dual_enumerated, 1) == Sides(54, 54), [] { return std::string("first moment"); });
    c.expect(check_second_moment(r.w, r.dual_enumerated, 1, 4) == Sides(756, 756), [] { return std::string("second moment"); });
  }));
  out.push_back(run_check(g, "exhaustive form counts", [&](Check& c) {
    for (auto [q, t] : kCodeParams) {
      const auto p = SchemeParams::make(q, t);
      const WeightDist w = weight_distribution(LinearCode::full(make_field(q), p), o.enumeration);
      for (long s = 0; s <= p.n; ++s)
        c.expect(w.counts[static_cast<size_t>(s)] == xi(p, s), [&] { return "q,t,s=" + args({q, t, s}); });
    }
  }));
  out.push_back(run_check(g, "random codes: MacWilliams, moments, corollaries", [&](Check& c) {
    std::mt19937_64 rng(o.seed + 7);
    for (auto [q, t] : kCodeParams) {
      const auto p = SchemeParams::make(q, t);
      const auto field = make_field(q);
      std::uniform_int_distribution<int> kdist(0, p.dimension());
      for (int trial = 0; trial < o.random_codes; ++trial) {
        const LinearCode code = random_code(field, p, kdist(rng), rng);
        const auto where = [&] { return serialize_code(code); };
        const VerifyReport r = verify_code(code, o.enumeration);
        c.expect(r.verdict(), where);
        c.expect(transform_matrix(r.dual_enumerated, r.dual_size) == r.w, where);
        for (int phi = 0; phi <= p.n; ++phi) {
          const auto m1 = check_first_moment(r.w, r.dual_enumerated, phi);
          const auto m2 = check_second_moment(r.w, r.dual_enumerated, phi, code.dimension());
          c.expect(m1.first == m1.second && m2.first == m2.second, where);
        }
        for (const auto& cc : corollary_bounds(r.w, min_distance(r.dual_enumerated), diameter(r.dual_enumerated)))
          c.expect(cc.holds(), where);
        const auto d = min_distance(r.w);
        if (d) c.expect(singleton_holds(p, r.code_size, *d), where);
      }
    }
  }));
  out.push_back(run_check(g, "MSRD search", [&](Check& c) {
    for (auto [q, t, d] : std::vector<std::tuple<long, int, int>>{{2, 5, 2}, {3, 5, 2}, {2, 3, 1}, {2, 5, 1}}) {
      const auto p = SchemeParams::make(q, t);
      MsrdSearchOptions so;
      so.seed = o.seed;
      so.enumeration = o.enumeration;
      const auto code = find_msrd(make_field(q), p, d, so);
      const auto where = [&] { return "q,t,d=" + args({q, t, d}); };
      c.expect(code.has_value(), where);
      if (!code) continue;
      const WeightDist w = weight_distribution(*code, o.enumeration);
      const WeightDist wd = weight_distribution(dual(*code), o.enumeration);
      c.expect(w == msrd_distribution(p, d), where);
      c.expect(wd == msrd_distribution(p, p.n - d + 2), where);
      // d = 1 makes the dual the zero code, which has no minimum distance.
      const int dd = p.n - d + 2;
      c.expect(min_distance(wd) == (dd <= p.n ? std::optional<int>(dd) : std::nullopt), where);
    }
  }));
  return out;
}

}  // namespace

std::vector<std::string> selftest_groups() {
  return {"combinatorics", "lambda", "homopoly", "krawtchouk", "calculus", "moments", "codes"};
}

std::vector<CheckResult> run_selftest_group(const std::string& group, const SelftestOptions& options) {
  if (group == "combinatorics") return combinatorics(options);
  if (group == "lambda") return lambda_group(options);
  if (group == "homopoly") return homopoly_group(options);
  if (group == "krawtchouk") return krawtchouk_group(options);
  if (group == "calculus") return calculus_group(options);
  if (group == "moments") return moments_group(options);
  if (group == "codes") return codes_group(options);
  throw std::invalid_argument("unknown selftest group '" + group + "'");
}

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& g : selftest_groups()) {
    auto part = run_selftest_group(g, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace skewrank
