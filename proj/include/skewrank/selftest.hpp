#pragma once

// The library's identity suite: every exact identity the algebra rests on,
// checked over fixed parameter ranges and seeded random inputs.

#include <cstdint>
#include <string>
#include <vector>

#include "skewrank/code.hpp"

namespace skewrank {

struct CheckResult {
  std::string group;
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  /// First failing case, empty on success.
  std::string detail;
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  /// Random codes per (q, t) in the MacWilliams and moment checks.
  int random_codes = 20;
  /// Random polynomial pairs in the Leibniz checks.
  int random_pairs = 50;
  EnumOptions enumeration;
};

/// combinatorics, lambda, homopoly, krawtchouk, calculus, moments, codes.
std::vector<std::string> selftest_groups();

/// Throws std::invalid_argument for an unknown group.
std::vector<CheckResult> run_selftest_group(const std::string& group, const SelftestOptions& options = {});
std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});

}  // namespace skewrank
