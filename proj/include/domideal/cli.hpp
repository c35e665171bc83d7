#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace domideal {

// Entry point of the domideal command-line tool, exposed for in-process
// testing. args excludes the program name. Results go to `out`, diagnostics
// to `err`. Exit codes: 0 success / property holds, 1 property fails or a
// verification sweep found counterexamples, 2 parse/scale/usage errors,
// 3 not applicable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domideal
