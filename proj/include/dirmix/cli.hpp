#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dirmix::cli {

/// Exit codes: 0 when every check passed, 1 when a verification or
/// simulation check failed (output is still written), 2 on usage errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirmix::cli
