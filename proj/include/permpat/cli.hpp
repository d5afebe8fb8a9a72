#pragma once

#include <iosfwd>

namespace permpat::cli {

/// Process exit codes of the permpat tool.
enum ExitCode : int {
    kAffirmative = 0,
    kNegative = 1,
    kUsage = 2,
    kInput = 3,
    kBudget = 4,
};

/// Runs the tool with argv[0] as program name; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permpat::cli
