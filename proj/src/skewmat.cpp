#include "skewrank/skewmat.hpp"

#include <stdexcept>
#include <string>

namespace skewrank {

size_t upper_index(int t, int i, int j) {
  if (!(0 <= i && i < j && j < t)) throw std::out_of_range("upper_index: need 0 <= i < j < t");
  // Rows 0..i-1 contribute (t-1) + (t-2) + ... + (t-i) entries.
  const auto ti = static_cast<size_t>(t);
  const auto ii = static_cast<size_t>(i);
  return ii * ti - ii * (ii + 1) / 2 + static_cast<size_t>(j - i - 1);
}

SkewMat::SkewMat(int t_, Row upper_) : t(t_), upper(std::move(upper_)) {
  if (t < 1) throw std::invalid_argument("SkewMat: t must be >= 1");
  if (upper.size() != upper_size(t)) {
    throw std::invalid_argument("SkewMat: expected " + std::to_string(upper_size(t)) + " entries, got " +
                                std::to_string(upper.size()));
  }
}

Elem SkewMat::at(const GaloisField& f, int i, int j) const {
  if (i == j) return 0;
  if (i < j) return upper[upper_index(t, i, j)];
  return f.neg(upper[upper_index(t, j, i)]);
}

Matrix SkewMat::full(const GaloisField& f) const {
  Matrix a(static_cast<size_t>(t), Row(static_cast<size_t>(t), 0));
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(f, i, j);
  }
  return a;
}

SkewMat SkewMat::from_full(const GaloisField& f, const Matrix& a) {
  const int t = static_cast<int>(a.size());
  SkewMat s = zero(t);
  for (int i = 0; i < t; ++i) {
    const auto& row = a[static_cast<size_t>(i)];
    if (row.size() != a.size()) throw std::invalid_argument("SkewMat::from_full: matrix is not square");
    if (row[static_cast<size_t>(i)] != 0) throw std::invalid_argument("SkewMat::from_full: nonzero diagonal");
    for (int j = i + 1; j < t; ++j) {
      const Elem v = row[static_cast<size_t>(j)];
      if (a[static_cast<size_t>(j)][static_cast<size_t>(i)] != f.neg(v)) {
        throw std::invalid_argument("SkewMat::from_full: matrix is not skew-symmetric");
      }
      s.upper[upper_index(t, i, j)] = v;
    }
  }
  return s;
}

int skew_rank(const GaloisField& f, const SkewMat& a) {
  const size_t r = rank(f, a.full(f));
  if (r % 2 != 0) throw std::logic_error("skew_rank: alternating matrix of odd rank " + std::to_string(r));
  return static_cast<int>(r / 2);
}

Elem bilinear(const GaloisField& f, const SkewMat& a, const Row& x, const Row& y) {
  Elem acc = 0;
  for (int i = 0; i < a.t; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < a.t; ++j) {
      if (i == j || y[static_cast<size_t>(j)] == 0) continue;
      acc = f.add(acc, f.mul(f.mul(x[static_cast<size_t>(i)], a.at(f, i, j)), y[static_cast<size_t>(j)]));
    }
  }
  return acc;
}

std::pair<Matrix, int> canonical_decompose(const GaloisField& f, const SkewMat& a) {
  // Symplectic Gram-Schmidt on the standard basis.
  Matrix pool = identity(static_cast<size_t>(a.t));
  Matrix out;
  int s = 0;
  for (;;) {
    size_t pi = pool.size(), pj = pool.size();
    Elem b = 0;
    for (size_t i = 0; i < pool.size() && pi == pool.size(); ++i) {
      for (size_t j = i + 1; j < pool.size(); ++j) {
        b = bilinear(f, a, pool[i], pool[j]);
        if (b != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == pool.size()) break;
    Row e = pool[pi];
    Row fv = pool[pj];
    const Elem binv = f.inv(b);
    for (auto& v : fv) v = f.mul(v, binv);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pj));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pi));
    for (auto& v : pool) {
      const Elem vf = bilinear(f, a, v, fv);
      const Elem ve = bilinear(f, a, v, e);
      axpy(f, v, f.neg(vf), e);
      axpy(f, v, ve, fv);
    }
    out.push_back(std::move(e));
    out.push_back(std::move(fv));
    ++s;
  }
  for (auto& v : pool) out.push_back(std::move(v));
  return {out, s};
}

SkewMat canonical_form(int t, int s) {
  if (s < 0 || 2 * s > t) throw std::invalid_argument("canonical_form: need 0 <= 2s <= t");
  SkewMat c = SkewMat::zero(t);
  for (int b = 0; b < s; ++b) c.upper[upper_index(t, 2 * b, 2 * b + 1)] = 1;
  return c;
}

SkewMat congruent(const GaloisField& f, const SkewMat& a, const Matrix& p) {
  return SkewMat::from_full(f, multiply(f, multiply(f, p, a.full(f)), transpose(p)));
}

}  // namespace skewrank
