#pragma once

#include <stdexcept>
#include <string>

namespace extshift {

/// Operands live over different ground dimensions or grades.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text or file input. `line` is 0 when unknown.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An enumeration ran past its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The round-robin limit iteration hit its round cap.
class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical claim the library relies on was observed to fail.
/// Raised only when a computed object contradicts a proven invariant
/// (a bound is exceeded, a limit changes dimension, ...).
class ClaimViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace extshift
