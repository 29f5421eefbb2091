#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pds {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailure = 1, kExitUsage = 2 };

/// Runs the `pds` command line (argv[0] is the program name).
/// Subcommands: enumerate, verify, count, bruteforce.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pds
