#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catq {

// Runs one CLI invocation (argv without the program name). Exit codes:
// 0 = all checks pass, 1 = a check failed on valid input, 2 = invalid
// input or usage.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace catq
