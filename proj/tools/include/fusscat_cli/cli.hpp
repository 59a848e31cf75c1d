#pragma once

#include <iosfwd>

namespace fusscat::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kGuardRail = 3,
  kSchema = 4,
  kInvariant = 5,
  kIo = 6,
};

/// Runs the `fusscat` command line against the given streams and returns the exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fusscat::cli
