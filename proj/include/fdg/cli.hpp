#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdg {

// Runs one command (argv without the program name). Exit codes: 0 success,
// 1 domain errors (bad files, unknown names, capacity), 2 usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdg
