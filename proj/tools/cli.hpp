#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddcycle::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2, kInconsistency = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddcycle::cli
