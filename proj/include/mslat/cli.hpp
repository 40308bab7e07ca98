#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mslat {

/// Runs one command line (without the program name). Exit codes: 0 success
/// or pass, 1 property violation or negative margin, 2 input or usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mslat
