#pragma once

#include <ostream>

namespace pairwords {

// Entry point of the command-line tool. Returns the process exit code:
// 0 on success, 1 when a computation is refused (budget), 2 on bad arguments.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pairwords
