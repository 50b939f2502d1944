#pragma once

#include <iosfwd>

namespace rews::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kViolations = 2,
  kResourceLimit = 3,
};

/// Runs one command line. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rews::cli
