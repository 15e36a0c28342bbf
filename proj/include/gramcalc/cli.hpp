#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gramcalc {

/// Exit codes shared by every subcommand.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gramcalc
