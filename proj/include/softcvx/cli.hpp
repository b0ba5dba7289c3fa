#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace softcvx::cli {

/// Exit codes: 0 valid / property holds, 1 fails (witness printed),
/// 2 usage or format error.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace softcvx::cli
