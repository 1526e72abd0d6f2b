#pragma once

#include <iosfwd>

namespace trineq::cli {

enum ExitCode : int { kOk = 0, kViolations = 1, kUsage = 2 };

// Subcommands: eval, check, search, reproduce.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trineq::cli
