#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symcurv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Runs one command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcurv::cli
