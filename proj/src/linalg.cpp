#include "skewrank/linalg.hpp"

#include <stdexcept>

namespace skewrank {

void axpy(const GaloisField& f, Row& dst, Elem c, const Row& src) {
  if (c == 0) return;
  for (size_t i = 0; i < dst.size(); ++i) {
    if (src[i] != 0) dst[i] = f.add(dst[i], f.mul(c, src[i]));
  }
}

std::vector<size_t> rref(const GaloisField& f, Matrix& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const Elem inv = f.inv(m[r][c]);
    for (auto& v : m[r]) v = f.mul(v, inv);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i != r && m[i][c] != 0) axpy(f, m[i], f.neg(m[i][c]), m[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

size_t rank(const GaloisField& f, Matrix m) { return rref(f, m).size(); }

Matrix kernel(const GaloisField& f, Matrix m, size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("kernel: ragged matrix");
  }
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  Matrix out;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

Matrix multiply(const GaloisField& f, const Matrix& a, const Matrix& b) {
  const size_t inner = b.size();
  const size_t cols = inner ? b[0].size() : 0;
  Matrix out(a.size(), Row(cols, 0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("multiply: dimension mismatch");
    for (size_t k = 0; k < inner; ++k) axpy(f, out[i], a[i][k], b[k]);
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix out(a[0].size(), Row(a.size(), 0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

Matrix identity(size_t n) {
  Matrix out(n, Row(n, 0));
  for (size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

}  // namespace skewrank
