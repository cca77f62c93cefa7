#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace patience::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name. Returns 0 on success or PASS, 1 on a
// failed verification, 2 on a usage error or an exceeded oracle bound.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patience::cli
