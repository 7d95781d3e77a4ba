#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lucas::cli {

/// Exit codes of the command-line tool.
enum Exit : int { Ok = 0, PropertyFailed = 1, UsageError = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucas::cli
