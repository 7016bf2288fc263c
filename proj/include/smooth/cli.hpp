#pragma once

#include <iosfwd>

namespace smooth {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,   // verification failed, word rejected
  kExitUsage = 2,     // bad arguments
  kExitResourceCap = 3,
};

// Entry point of smoothctl, with injectable streams for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace smooth
