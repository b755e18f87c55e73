#ifndef CONECALC_CLI_HPP
#define CONECALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace conecalc {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 verification failure, 2 usage error, 3 domain
/// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace conecalc

#endif
