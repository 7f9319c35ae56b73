#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace berezin::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kContractViolation = 3,
  kInternal = 4,
};

/// Runs the command line `args` (without the program name). The JSON record
/// goes to `out`; tables and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace berezin::cli
