#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smallcover {

// Command-line front end. Exit codes: 0 success, 1 validation/input failure,
// 2 internal assertion or post-check failure.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace smallcover
