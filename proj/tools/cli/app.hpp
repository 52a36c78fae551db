#pragma once

#include <iosfwd>

namespace mrey::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInvalid = 2,
  kExitNumerical = 3,
  kExitUsage = 64,
};

/// Full command-line entry point; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mrey::cli
