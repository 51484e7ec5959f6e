#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace autstab::cli {

// Runs one subcommand (args exclude the program name) writing human or JSON
// output to `out` and diagnostics to `err`. Returns the process exit code:
// 0 success, 1 verification failure, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autstab::cli
