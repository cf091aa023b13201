#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace extshift::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,     ///< malformed input or usage
  kFalsified = 2,      ///< a bound or invariant failed on a computed object
  kBudgetExceeded = 3, ///< enumeration budget or iteration cap reached
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extshift::cli
