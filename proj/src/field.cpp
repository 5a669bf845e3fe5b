#include "skewrank/field.hpp"

#include <stdexcept>

#include "skewrank/qcombinat.hpp"

namespace skewrank {

namespace {

constexpr long kMaxQ = 97;

std::vector<int> builtin_modulus(long q) {
  switch (q) {
    case 4:
      return {1, 1, 1};  // x^2 + x + 1
    case 8:
      return {1, 1, 0, 1};  // x^3 + x + 1
    case 9:
      return {1, 0, 1};  // x^2 + 1
    default:
      return {};
  }
}

std::vector<int> digits(long v, long p, int e) {
  std::vector<int> d(static_cast<size_t>(e));
  for (int i = 0; i < e; ++i) {
    d[static_cast<size_t>(i)] = static_cast<int>(v % p);
    v /= p;
  }
  return d;
}

long undigits(const std::vector<int>& d, long p) {
  long v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

std::string supported_fields() {
  return "primes q <= 97 and q in {4, 8, 9} (other prime powers <= 97 need modpoly=...)";
}

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("GaloisField::inv: zero has no inverse");
  return inv_[a];
}

void GaloisField::verify_axioms() const {
  const auto n = static_cast<Elem>(q_);
  for (Elem a = 0; a < n; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || add(a, neg(a)) != 0) {
      throw std::logic_error("field table identity check failed");
    }
    if (a != 0 && mul(a, inv_[a]) != 1) {
      throw std::invalid_argument("modulus is not irreducible: " + std::to_string(a) + " has no inverse");
    }
  }
  if (q_ > 9) return;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) throw std::logic_error("field tables not commutative");
      for (Elem c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)) || mul(mul(a, b), c) != mul(a, mul(b, c)) ||
            mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          throw std::logic_error("field tables violate an axiom");
        }
      }
    }
  }
}

FieldPtr make_field(long q, std::optional<std::vector<int>> modulus) {
  const auto pe = prime_power_decompose(q);
  if (!pe) throw std::invalid_argument("q=" + std::to_string(q) + " is not a prime power");
  if (q > kMaxQ) {
    throw std::invalid_argument("q=" + std::to_string(q) + " is too large; supported: " + supported_fields());
  }
  auto f = std::make_shared<GaloisField>();
  f->q_ = q;
  f->p_ = pe->first;
  f->e_ = pe->second;
  const long p = f->p_;
  const int e = f->e_;
  if (e > 1) {
    std::vector<int> mod = modulus ? *modulus : builtin_modulus(q);
    if (mod.empty()) {
      throw std::invalid_argument("q=" + std::to_string(q) + " has no built-in modulus; supported: " +
                                  supported_fields());
    }
    if (mod.size() == static_cast<size_t>(e)) mod.push_back(1);
    if (mod.size() != static_cast<size_t>(e) + 1 || mod.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree " + std::to_string(e));
    }
    for (int c : mod) {
      if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    }
    f->modulus_ = mod;
  } else if (modulus && !modulus->empty()) {
    throw std::invalid_argument("a modulus only applies to proper prime powers");
  }

  const auto sz = static_cast<size_t>(q);
  f->add_.assign(sz * sz, 0);
  f->mul_.assign(sz * sz, 0);
  f->neg_.assign(sz, 0);
  f->inv_.assign(sz, 0);
  for (long a = 0; a < q; ++a) {
    const auto da = digits(a, p, e);
    for (long b = 0; b < q; ++b) {
      const auto db = digits(b, p, e);
      std::vector<int> s(static_cast<size_t>(e));
      for (int i = 0; i < e; ++i) s[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p;
      // Schoolbook product, then reduce by the monic modulus.
      std::vector<long> prod(static_cast<size_t>(2 * e - 1), 0);
      for (int i = 0; i < e; ++i) {
        for (int j = 0; j < e; ++j) prod[static_cast<size_t>(i + j)] += da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)];
      }
      for (int d = 2 * e - 2; d >= e; --d) {
        const long c = prod[static_cast<size_t>(d)] % p;
        prod[static_cast<size_t>(d)] = 0;
        if (c == 0) continue;
        for (int i = 0; i < e; ++i) prod[static_cast<size_t>(d - e + i)] += (p - c) * f->modulus_[static_cast<size_t>(i)];
      }
      std::vector<int> m(static_cast<size_t>(e));
      for (int i = 0; i < e; ++i) m[static_cast<size_t>(i)] = static_cast<int>(prod[static_cast<size_t>(i)] % p);
      f->add_[f->idx(static_cast<Elem>(a), static_cast<Elem>(b))] = static_cast<Elem>(undigits(s, p));
      f->mul_[f->idx(static_cast<Elem>(a), static_cast<Elem>(b))] = static_cast<Elem>(undigits(m, p));
    }
  }
  for (long a = 0; a < q; ++a) {
    for (long b = 0; b < q; ++b) {
      if (f->add_[f->idx(static_cast<Elem>(a), static_cast<Elem>(b))] == 0) f->neg_[static_cast<size_t>(a)] = static_cast<Elem>(b);
      if (f->mul_[f->idx(static_cast<Elem>(a), static_cast<Elem>(b))] == 1) f->inv_[static_cast<size_t>(a)] = static_cast<Elem>(b);
    }
  }
  f->verify_axioms();
  return f;
}

}  // namespace skewrank
