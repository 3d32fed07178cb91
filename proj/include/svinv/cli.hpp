#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svinv {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

/// Runs one CLI invocation; args excludes the program name. Reports go to
/// `out` (or to --out), diagnostics to `err`.
int execute_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svinv
