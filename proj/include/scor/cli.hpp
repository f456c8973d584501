#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scor {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitNumeric = 3 };

/// Environment variable holding the OpenMP worker count.
inline constexpr const char* kThreadsEnv = "SCOR_NUM_THREADS";

/// Runs the `scor` command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scor
