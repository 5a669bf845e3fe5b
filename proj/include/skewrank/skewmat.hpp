#pragma once

// Alternating (skew-symmetric, zero-diagonal) t x t matrices stored by their
// strict upper triangle in row-major order (1,2),(1,3),...,(1,t),(2,3),...

#include <utility>

#include "skewrank/linalg.hpp"

namespace skewrank {

/// Number of strict upper-triangle positions, t(t-1)/2.
inline size_t upper_size(int t) { return static_cast<size_t>(t) * static_cast<size_t>(t - 1) / 2; }

/// Index of position (i, j), 0-based with i < j.
size_t upper_index(int t, int i, int j);

struct SkewMat {
  int t = 0;
  Row upper;

  SkewMat() = default;
  SkewMat(int t_, Row upper_);
  static SkewMat zero(int t) { return SkewMat(t, Row(upper_size(t), 0)); }

  /// Entry (i, j) of the full matrix, 0-based.
  Elem at(const GaloisField& f, int i, int j) const;
  Matrix full(const GaloisField& f) const;
  /// Reads the strict upper triangle; the input must be alternating.
  static SkewMat from_full(const GaloisField& f, const Matrix& a);

  friend bool operator==(const SkewMat&, const SkewMat&) = default;
};

/// Half the rank of the full matrix.
int skew_rank(const GaloisField& f, const SkewMat& a);

/// x A y^T.
Elem bilinear(const GaloisField& f, const SkewMat& a, const Row& x, const Row& y);

/// P nonsingular and s with P A P^T = diag(E2 x s, 0), E2 = [[0,1],[-1,0]].
std::pair<Matrix, int> canonical_decompose(const GaloisField& f, const SkewMat& a);

/// The block matrix diag(E2 x s, 0) of size t.
SkewMat canonical_form(int t, int s);

/// P A P^T for a t x t matrix P.
SkewMat congruent(const GaloisField& f, const SkewMat& a, const Matrix& p);

}  // namespace skewrank
