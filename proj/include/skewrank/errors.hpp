#pragma once

#include <stdexcept>
#include <string>

namespace skewrank {

/// An exact identity that must hold was found violated.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration or search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A distribution transform produced a negative or non-integral entry.
class InconsistentDistribution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed code file. line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) +
                           (column > 0 ? ", column " + std::to_string(column) : std::string()) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace skewrank
