#ifndef SYMPCP_TOOLS_CLI_HPP_
#define SYMPCP_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sympcp::cli {

  enum ExitCode : int {
    affirmative = 0,
    negative    = 1,
    usage_error = 2,
    exhausted   = 3,
  };

  // Runs one command. `args` excludes the program name. The report goes to
  // `out` (or to --output), diagnostics to `err`.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace sympcp::cli

#endif  // SYMPCP_TOOLS_CLI_HPP_
