#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ogsat::cli {

// Batch front end. Exit codes: 0 success / property true, 1 property
// false or nothing found, 2 usage or input error, 3 budget exhausted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ogsat::cli
