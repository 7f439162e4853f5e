#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace misere {

// Runs one CLI invocation. Exit codes: 0 definite result, 2 bounded or
// inconclusive verdict, 3 budget exceeded, 64 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace misere
