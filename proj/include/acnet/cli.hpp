#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace acnet {

/// Run the command-line front end on already-split arguments (no program
/// name). Returns the process exit code: 0 success/admissible, 1 domain
/// rejection, 2 input or usage error, 3 internal verification failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace acnet
