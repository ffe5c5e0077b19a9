#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nekrasov::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsage = 2, kInternal = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nekrasov::cli
