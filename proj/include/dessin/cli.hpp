#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dessin::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  ok = 0,           // success, or dessins separated
  invalid = 1,      // validation failure
  parse_failure = 2,
  not_separated = 3,
  internal = 4,
};

// Runs the command line (without the program name) and returns the exit code.
int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err);

} // namespace dessin::cli
