#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace actcode::cli {

/// Exit codes: 0 success (possibly with warnings), 1 input or validation
/// error, 2 internal error.
enum ExitCode : int { kOk = 0, kInputError = 1, kInternalError = 2 };

/// Runs the tool with args[0] as the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace actcode::cli
