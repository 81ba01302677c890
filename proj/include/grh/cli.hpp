#pragma once

#include <iosfwd>

namespace grh {

/// Exit codes: 0 verified/true, 1 verified false, 2 usage or input error, 3 capacity error.
enum ExitCode : int { kExitTrue = 0, kExitFalse = 1, kExitUsage = 2, kExitCapacity = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grh
