#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcann::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kClaimFailed = 2 };

/// Runs one command line. The JSON report goes to out; usage text and
/// diagnostics go to err. stdin is read when a file argument is "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace lcann::cli
