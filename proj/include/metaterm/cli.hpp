#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metaterm {

/// Command dispatcher. Exit codes: 0 success, 1 usage, 2 parse error,
/// 3 precondition violation, 4 counterexample verdict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metaterm
