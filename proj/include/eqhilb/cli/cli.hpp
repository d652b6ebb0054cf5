#ifndef EQHILB_CLI_CLI_HPP
#define EQHILB_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace eqhilb {

// Runs one command line (without the program name). Returns the exit
// code: 0 success, 2 usage or parse error, 1 failed --strict assertion or
// internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqhilb

#endif  // EQHILB_CLI_CLI_HPP
