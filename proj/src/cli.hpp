#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpd::cli {

// Dispatches one command; returns the process exit code:
// 0 success, 2 usage error, 3 domain error, 4 size bound exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpd::cli
