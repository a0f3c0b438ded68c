#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace laytrop {

enum ExitCode { ExitOk = 0, ExitDomain = 1, ExitUnverified = 2, ExitUsage = 3 };

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace laytrop
