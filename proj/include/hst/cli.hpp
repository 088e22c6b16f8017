#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hst {

// Run the command-line interface on `args` (without the program name).
// Returns 0 on success, 1 on verification failure, 2 on usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hst
