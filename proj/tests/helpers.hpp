#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "skewrank/code.hpp"

namespace testing {

inline skewrank::SkewMat skew(int t, const oracle::Coords& u) {
  return skewrank::SkewMat(t, skewrank::Row(u.begin(), u.end()));
}

inline oracle::Coords coords_of(const skewrank::SkewMat& a) { return oracle::Coords(a.upper.begin(), a.upper.end()); }

inline skewrank::LinearCode code_of(long q, int t, const std::vector<oracle::Coords>& rows) {
  std::vector<skewrank::SkewMat> b;
  for (const auto& r : rows) b.push_back(skew(t, r));
  return skewrank::LinearCode::from_rows(skewrank::make_field(q), skewrank::SchemeParams::make(q, t), b);
}

inline std::vector<skewrank::Integer> ints(std::initializer_list<long> xs) {
  return std::vector<skewrank::Integer>(xs.begin(), xs.end());
}

// The four-dimensional code over F_3 with t = 4 used throughout the tests.
inline skewrank::LinearCode example_code() {
  return code_of(3, 4, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}});
}

}  // namespace testing
