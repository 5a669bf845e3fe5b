#pragma once

// Dense linear algebra over a GaloisField. Matrices are vectors of rows.

#include <vector>

#include "skewrank/field.hpp"

namespace skewrank {

using Row = std::vector<Elem>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row (their count is the rank). Zero rows are removed.
std::vector<size_t> rref(const GaloisField& f, Matrix& m);

size_t rank(const GaloisField& f, Matrix m);

/// Basis of {x : m x^T = 0} with `cols` coordinates.
Matrix kernel(const GaloisField& f, Matrix m, size_t cols);

/// a * b for a (r x s) and b (s x c).
Matrix multiply(const GaloisField& f, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix identity(size_t n);

/// dst += c * src, entrywise.
void axpy(const GaloisField& f, Row& dst, Elem c, const Row& src);

}  // namespace skewrank
