#pragma once

// Text format for codes:
//
//   # comment
//   q=3 t=4 k=2 [modpoly=c0,c1,...,ce]
//   <t(t-1)/2 integers in [0, q), upper triangle, row-major>
//   ...
//
// For q = p^e an entry's base-p digits (lowest first) are its polynomial
// coordinates. modpoly lists the monic modulus low degree first; the leading
// 1 may be omitted.

#include <string>
#include <vector>

#include "skewrank/code.hpp"

namespace skewrank {

struct ParsedCode {
  LinearCode code;
  std::vector<std::string> warnings;
};

/// Throws ParseError with the offending line and column.
ParsedCode parse_code(const std::string& text);
ParsedCode read_code_file(const std::string& path);

std::string serialize_code(const LinearCode& c);

}  // namespace skewrank
