#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgknot {

// Full command dispatch: args excludes the program name. Exit status:
// 0 definitive result (including NOT_SLICE), 1 input error, 2 inconclusive
// or unknown, 3 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cgknot
