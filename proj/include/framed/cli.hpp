#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace framed {

// Entry point behind the framedlie binary. Returns the process exit code:
// 0 on success, 1 when a requested check fails, 2 on usage or input errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace framed
