#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crossmod::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInvalid = 2 };

/// One command line without the program name. The report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossmod::cli
