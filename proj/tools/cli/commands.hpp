#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmod::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kInternal = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The identity names accepted by `verify`, one per line.
std::string verify_names();

}  // namespace qmod::cli
