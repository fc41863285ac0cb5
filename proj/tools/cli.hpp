#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oblivion::cli {

enum ExitCode { kOk = 0, kViolations = 1, kInputError = 2 };

// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oblivion::cli
