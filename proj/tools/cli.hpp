#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gcluster::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitInputError = 2;

// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcluster::tools
