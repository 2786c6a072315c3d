#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgg {

// Dispatches one command line (without the program name). Exit codes:
// 0 all checks pass, 1 a mathematical verdict is negative, 2 usage, IO or
// parse failure. All mathematics lives in the library; this layer only
// parses flags, reads files and renders reports.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bgg
