#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpindex::cli {

enum ExitCode : int { Success = 0, Mismatch = 1, Usage = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and help on errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpindex::cli
