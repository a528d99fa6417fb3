#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rforge::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_usage = 2,
  exit_exhausted = 3,
};

// Parses argv (argv[0] is the program name), runs one subcommand and writes
// its result to out. Diagnostics and usage text go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rforge::cli
