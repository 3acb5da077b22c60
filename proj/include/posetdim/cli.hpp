#ifndef POSETDIM_CLI_HPP
#define POSETDIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace posetdim::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 1,
    kLemmaViolation = 2,
    kDimensionNotFound = 3,
};

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetdim::cli

#endif
