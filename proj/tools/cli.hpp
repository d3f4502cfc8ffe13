#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svt::cli {

// Exit codes: 0 success, 1 verification or search failure, 2 unknown or malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svt::cli
