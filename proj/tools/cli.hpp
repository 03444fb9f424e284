#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace udesign::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,   // success, or the design is universal
  kNegative = 1,  // a negative mathematical answer: non-universal, infeasible
  kUsage = 2,     // bad arguments or unreadable input
};

/// Largest C(v, b) a command will touch without --force.
inline constexpr unsigned long long kGuardrail = 1'000'000;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace udesign::cli
