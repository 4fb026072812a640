#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shifted::cli {

// args excludes the program name. Returns 0 on success, 1 when `check` finds
// violations, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shifted::cli
