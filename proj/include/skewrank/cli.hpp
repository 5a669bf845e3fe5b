#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewrank::cli {

enum ExitCode : int {
  kOk = 0,
  kVerdictFalse = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewrank::cli
