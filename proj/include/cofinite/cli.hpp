#ifndef COFINITE_CLI_HPP_
#define COFINITE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace cofinite {

  // Exit codes of the command-line front end.
  enum ExitCode : int {
    kSuccess           = 0,
    kParseFailure      = 1,
    kInvalidArgument   = 2,
    kUnsupportedFlavor = 3,
    kViolationFound    = 4
  };

  // Runs the CLI on `args` (args[0] is the program name). With --json, `out`
  // receives exactly one JSON document; diagnostics go to `err`.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace cofinite

#endif  // COFINITE_CLI_HPP_
