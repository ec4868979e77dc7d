#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trimorph::cli {

/// Exit statuses of the command-line tool.
enum Status : int {
  kOk = 0,
  kFalse = 1,     // a checked property does not hold (check --assert, examples)
  kUsage = 2,     // bad arguments, unparsable input or an inapplicable query
  kOverflow = 3,  // count overflow or aborted search
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trimorph::cli
