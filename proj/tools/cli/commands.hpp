#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coverkit::cli {

enum ExitCode : int { kVerified = 0, kFalsified = 1, kUsage = 2 };

// Runs one subcommand. `args` excludes the program name. Every report ends
// with `result|cmd=<name>|verdict=<str>|witness=<int-or-none>` on `out`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::istream& in);

}  // namespace coverkit::cli
