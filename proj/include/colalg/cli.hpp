#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace colalg {

/// Runs the command line (args excludes the program name). Returns the exit code:
/// 0 success or pass, 1 violation found, 2 input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colalg
