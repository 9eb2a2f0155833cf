#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace threebox::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a domain failure
/// (including a failed --expect), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace threebox::cli
