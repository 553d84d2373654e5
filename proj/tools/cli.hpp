#pragma once

#include <iosfwd>

namespace netgalois::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCap = 3 };

/// Entry point of the netgalois tool; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace netgalois::cli
