#ifndef MEALY_CLI_HPP_
#define MEALY_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace mealy::cli {

  // Runs the command line `args` (without the program name) and returns the
  // process exit status: 0 on success, 1 for input or validation errors, 2
  // for usage errors.  Budget exhaustion is reported in the output, not as
  // an error.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace mealy::cli

#endif  // MEALY_CLI_HPP_
