#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcd::tools {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMismatch = 2,
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcd::tools
