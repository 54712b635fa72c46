#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thetalab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name). Reports go to out,
// diagnostics to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace thetalab::cli
