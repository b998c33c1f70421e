#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strokeforge::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kProcessing = 2 };

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strokeforge::cli
