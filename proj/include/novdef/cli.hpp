#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace novdef::cli {

/// Exit codes: 0 pass/Equivalent, 1 fail/NotEquivalent, 2 Unknown, 3 usage or input error.
enum ExitCode : int { kPass = 0, kFail = 1, kUnknown = 2, kUsage = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace novdef::cli
