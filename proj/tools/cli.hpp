#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbcol::cli {

/// Exit codes.
enum : int { kOk = 0, kUsage = 1, kMath = 2, kInternal = 3 };

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbcol::cli
