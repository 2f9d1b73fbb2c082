#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mg {

// Full command surface; returns the process exit code:
// 0 success, 1 input error, 2 internal failure, 3 conjecture violation found.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mg
