#ifndef WEINSTEIN_TOOLS_CLI_HPP
#define WEINSTEIN_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace weinstein::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name) writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weinstein::cli

#endif
