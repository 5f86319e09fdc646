#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ccs {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 when the property holds or the computation succeeded, 1 when it provably
/// fails, 2 on budget exhaustion or bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccs
