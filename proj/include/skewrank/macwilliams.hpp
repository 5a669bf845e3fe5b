#pragma once

// The MacWilliams identity for the skew rank metric, by the Krawtchouk matrix
// and by the functional skew-q-transform, plus a cross-check against the
// enumerated dual.

#include <string>
#include <vector>

#include "skewrank/code.hpp"

namespace skewrank {

/// c' = (1/|C|) c P. Throws InconsistentDistribution when an entry of c' is
/// negative or not an integer, std::invalid_argument when sum(c) != |C|.
WeightDist transform_matrix(const WeightDist& w, const Integer& code_size);

/// (1/|C|) sum_i c_i (nu^[i] * mu^[n-i]) at lambda = m, built from skew-q
/// powers. Same errors as transform_matrix.
WeightDist transform_functional(const WeightDist& w, const Integer& code_size);

struct VerifyReport {
  WeightDist w;
  WeightDist dual_enumerated;
  WeightDist dual_matrix;
  WeightDist dual_functional;
  Integer code_size;
  Integer dual_size;
  bool size_product_ok = false;
  /// One line per disagreeing entry.
  std::vector<std::string> mismatches;
  bool verdict() const { return size_product_ok && mismatches.empty(); }
};

/// Runs all three routes on c. Mismatches are collected, not thrown.
VerifyReport verify_code(const LinearCode& c, const EnumOptions& options = {});

}  // namespace skewrank
