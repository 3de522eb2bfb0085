#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace f2p::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kInputData = 3, kResource = 4 };

/// Runs the `f2p` command line. `args` excludes the program name.
/// Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f2p::cli
