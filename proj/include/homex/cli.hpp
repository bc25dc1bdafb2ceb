#ifndef HOMEX_CLI_HPP
#define HOMEX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace homex::cli {

// Runs the command line given as plain arguments (no program name).
// Returns the process exit status: 0 success, 1 failed verification
// assertion, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace homex::cli

#endif
