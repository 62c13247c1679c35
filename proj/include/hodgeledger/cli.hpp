#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hodgeledger {

// Whole command-line surface as a library function so tests can drive it
// in-process.  `args` excludes the program name.  Returns the process exit
// code: 0 success / all checks pass, 1 a verification failed, 2 usage,
// parse, or fixture errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgeledger
