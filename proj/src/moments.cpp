#include "skewrank/moments.hpp"

#include <random>
#include <stdexcept>

#include "skewrank/errors.hpp"

namespace skewrank {

namespace {

Rational signed_value(long parity, Rational v) { return parity % 2 ? Rational(-v) : v; }

void check_pair(const WeightDist& w, const WeightDist& w_dual, int phi) {
  if (!(w.params == w_dual.params)) throw std::invalid_argument("moment check: distributions for different schemes");
  if (phi < 0 || phi > w.params.n) throw std::invalid_argument("moment check: need 0 <= phi <= n");
  const size_t n1 = static_cast<size_t>(w.params.n) + 1;
  if (w.counts.size() != n1 || w_dual.counts.size() != n1) throw std::invalid_argument("moment check: need n+1 entries");
}

// sum_{i>=phi} q^{2phi(n-i)} [i phi] c_i.
Rational second_lhs(const WeightDist& w, int phi) {
  const long q = w.params.q;
  const int n = w.params.n;
  Rational s = 0;
  for (int i = phi; i <= n; ++i) s += qpow(q, 2L * phi * (n - i)) * gauss(q, i, phi) * Rational(w.counts[static_cast<size_t>(i)]);
  return s;
}

// sum_{i<=phi} (-1)^i q^{2 sigma_i} q^{2i(phi-i)} [n-i, n-phi] gamma(m-2i, phi-i) c_i.
Rational second_inner(const SchemeParams& p, const std::vector<Integer>& c, int phi) {
  const long q = p.q;
  Rational s = 0;
  for (int i = 0; i <= phi; ++i) {
    Rational term = qpow(q, 2 * sigma(i) + 2L * i * (phi - i)) * gauss(q, p.n - i, p.n - phi) *
                    gamma(q, p.m - 2L * i, phi - i) * Rational(c[static_cast<size_t>(i)]);
    s += signed_value(i, term);
  }
  return s;
}

Rational first_lhs(const WeightDist& w, int phi) {
  const long q = w.params.q;
  const int n = w.params.n;
  Rational s = 0;
  for (int i = 0; i <= n - phi; ++i) s += gauss(q, n - i, phi) * Rational(w.counts[static_cast<size_t>(i)]);
  return s;
}

}  // namespace

Sides check_first_moment(const WeightDist& w, const WeightDist& w_dual, int phi) {
  check_pair(w, w_dual, phi);
  const auto& p = w.params;
  Rational inner = 0;
  for (int i = 0; i <= phi; ++i) inner += gauss(p.q, p.n - i, p.n - phi) * Rational(w_dual.counts[static_cast<size_t>(i)]);
  const Rational rhs = qpow(p.q, static_cast<long>(p.m) * (p.n - phi)) / Rational(w_dual.total()) * inner;
  return {first_lhs(w, phi), rhs};
}

Sides check_second_moment(const WeightDist& w, const WeightDist& w_dual, int phi, std::optional<int> k_dim) {
  check_pair(w, w_dual, phi);
  const auto& p = w.params;
  const long k = k_dim ? *k_dim : static_cast<long>(exact_log(w.total(), p.q));
  const Rational rhs = qpow(p.q, k - static_cast<long>(p.m) * phi) * second_inner(p, w_dual.counts, phi);
  return {second_lhs(w, phi), rhs};
}

std::vector<CorollaryCheck> corollary_bounds(const WeightDist& w, std::optional<int> d_dual, int diameter_dual) {
  const auto& p = w.params;
  if (w.counts.size() != static_cast<size_t>(p.n) + 1) throw std::invalid_argument("corollary_bounds: need n+1 entries");
  const long q = p.q;
  const int dprime = d_dual ? *d_dual : p.n + 1;
  const Integer size = w.total();
  const long k = static_cast<long>(exact_log(size, q));
  const Rational dual_size = Rational(p.space_size()) / Rational(size);
  std::vector<CorollaryCheck> out;
  for (int phi = 0; phi < dprime && phi <= p.n; ++phi) {
    out.push_back({"first", phi, first_lhs(w, phi),
                   qpow(q, static_cast<long>(p.m) * (p.n - phi)) / dual_size * gauss(q, p.n, phi)});
    out.push_back({"second", phi, second_lhs(w, phi),
                   qpow(q, k - static_cast<long>(p.m) * phi) * gauss(q, p.n, phi) * gamma(q, p.m, phi)});
  }
  for (int phi = diameter_dual + 1; phi <= p.n; ++phi) {
    out.push_back({"diameter", phi, second_inner(p, w.counts, phi), 0});
  }
  return out;
}

Rational delta_closed(long q, long lambda, int phi, int j) {
  if (phi < 0 || j < 0) throw std::invalid_argument("delta_closed: need phi, j >= 0");
  Rational sum = 0;
  for (int i = 0; i <= j; ++i) {
    sum += signed_value(i, gauss(q, j, i) * qpow(q, 2 * sigma(i)) * gamma(q, lambda - 2L * i, phi));
  }
  const Rational closed =
      j > phi ? Rational(0) : gamma(q, 2L * phi, j) * gamma(q, lambda - 2L * j, phi - j) * qpow(q, j * (lambda - 2L * j));
  if (sum != closed) {
    throw IdentityViolation("delta(" + std::to_string(lambda) + "," + std::to_string(phi) + "," + std::to_string(j) +
                            "): sum " + sum.get_str() + " != closed form " + closed.get_str());
  }
  return sum;
}

Rational epsilon_closed(long q, long Lambda, int phi, int i) {
  if (i < 0 || i > phi || phi > Lambda) throw std::invalid_argument("epsilon_closed: need 0 <= i <= phi <= Lambda");
  Rational sum = 0;
  for (int l = 0; l <= i; ++l) {
    sum += signed_value(l, gauss(q, i, l) * gauss(q, Lambda - i, phi - l) * qpow(q, 2L * l * (Lambda - phi)) *
                               qpow(q, 2 * sigma(l)) * gamma(q, 2L * (phi - l), i - l));
  }
  const Rational closed = signed_value(i, qpow(q, 2 * sigma(i)) * gauss(q, Lambda - i, Lambda - phi));
  if (sum != closed) {
    throw IdentityViolation("epsilon(" + std::to_string(Lambda) + "," + std::to_string(phi) + "," + std::to_string(i) +
                            "): sum " + sum.get_str() + " != closed form " + closed.get_str());
  }
  return sum;
}

std::vector<Rational> forward_sequence(const std::vector<Rational>& b, int l, long q) {
  if (l < 0 || b.size() != static_cast<size_t>(l) + 1) throw std::invalid_argument("forward_sequence: need l+1 entries");
  std::vector<Rational> a(b.size(), 0);
  for (int j = 0; j <= l; ++j) {
    for (int i = 0; i <= j; ++i) a[static_cast<size_t>(j)] += gauss(q, l - i, l - j) * b[static_cast<size_t>(i)];
  }
  return a;
}

std::vector<Rational> invert_sequence(const std::vector<Rational>& a, int l, long q) {
  if (l < 0 || a.size() != static_cast<size_t>(l) + 1) throw std::invalid_argument("invert_sequence: need l+1 entries");
  std::vector<Rational> b(a.size(), 0);
  for (int i = 0; i <= l; ++i) {
    for (int j = 0; j <= i; ++j) {
      b[static_cast<size_t>(i)] +=
          signed_value(i - j, qpow(q, 2 * sigma(i - j)) * gauss(q, l - j, l - i) * a[static_cast<size_t>(j)]);
    }
  }
  return b;
}

WeightDist msrd_distribution(const SchemeParams& params, int d) {
  const int n = params.n;
  if (d < 1 || d > n + 1) throw std::invalid_argument("msrd_distribution: need 1 <= d <= n+1");
  const long q = params.q;
  const long m = params.m;
  const Integer size = ipow(q, static_cast<unsigned long>(m * (n - d + 1)));
  WeightDist w{params, std::vector<Integer>(static_cast<size_t>(n) + 1, 0)};
  w.counts[0] = 1;
  for (int r = 0; d + r <= n; ++r) {
    Rational c = 0;
    for (int i = 0; i <= r; ++i) {
      const Rational term = qpow(q, 2 * sigma(r - i)) * gauss(q, d + r, d + i) * gauss(q, n, d + r) *
                            (Rational(size) * qpow(q, m * (d + i - n)) - 1);
      c += signed_value(r - i, term);
    }
    const Integer v = to_integer(c, "msrd_distribution");
    if (v < 0) throw std::logic_error("msrd_distribution: negative count " + v.get_str());
    w.counts[static_cast<size_t>(d + r)] = v;
  }
  return w;
}

bool singleton_holds(const SchemeParams& params, const Integer& size, int d) {
  if (d < 1 || d > params.n) return true;
  return size <= ipow(params.q, static_cast<unsigned long>(params.m * (params.n - d + 1)));
}

std::optional<LinearCode> find_msrd(FieldPtr field, const SchemeParams& params, int d, const MsrdSearchOptions& options) {
  if (d < 1 || d > params.n) {
    throw std::invalid_argument("find_msrd: need 1 <= d <= n = " + std::to_string(params.n) + ", got d=" + std::to_string(d));
  }
  if (d == 1) return LinearCode::full(field, params);
  const GaloisField& f = *field;
  const int target = params.m * (params.n - d + 1);
  std::uint64_t words_cap = 1;
  for (int i = 0; i < target; ++i) {
    if (words_cap > options.enumeration.budget / static_cast<std::uint64_t>(f.q())) {
      throw BudgetExceeded("find_msrd: target code of size q^" + std::to_string(target) + " exceeds the budget");
    }
    words_cap *= static_cast<std::uint64_t>(f.q());
  }

  const size_t N = upper_size(params.t);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> elem(0, static_cast<int>(f.q()) - 1);
  // Give up on a partial basis after this many consecutive rejections.
  const std::uint64_t restart_after = 64 + 16 * static_cast<std::uint64_t>(N);

  std::uint64_t trials = 0;
  while (trials < options.max_trials) {
    std::vector<SkewMat> basis;
    std::vector<Row> words{Row(N, 0)};
    std::uint64_t stuck = 0;
    while (static_cast<int>(basis.size()) < target && stuck < restart_after && trials < options.max_trials) {
      ++trials;
      ++stuck;
      Row v(N);
      for (auto& x : v) x = static_cast<Elem>(elem(rng));
      // Every new word is a nonzero multiple of v + c for some old word c.
      bool ok = true;
      for (const auto& c : words) {
        Row s = c;
        axpy(f, s, 1, v);
        if (skew_rank(f, SkewMat(params.t, s)) < d) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      stuck = 0;
      std::vector<Row> grown = words;
      for (long a = 1; a < f.q(); ++a) {
        for (const auto& c : words) {
          Row s = c;
          axpy(f, s, static_cast<Elem>(a), v);
          grown.push_back(std::move(s));
        }
      }
      words = std::move(grown);
      basis.emplace_back(params.t, std::move(v));
    }
    if (static_cast<int>(basis.size()) == target) {
      LinearCode code(field, params, std::move(basis));
      const WeightDist w = weight_distribution(code, options.enumeration);
      if (min_distance(w) == d) return code;
      throw std::logic_error("find_msrd: search produced a code that fails verification");
    }
  }
  return std::nullopt;
}

}  // namespace skewrank
