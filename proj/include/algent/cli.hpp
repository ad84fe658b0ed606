#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algent::cli {

// Full command-line entry point, separated from main() so the tests can
// drive it in-process. args excludes the program name. Results go to out,
// diagnostics to err. Returns the process exit code: 0 success, 1
// computational failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algent::cli
