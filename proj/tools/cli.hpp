#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdiep::cli {

// Stable exit-status contract.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,        // bad arguments or validation failure
  kNotRealised = 2,  // matrix constructed but a check (usually nonnegativity) failed
  kIoError = 3,
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdiep::cli
