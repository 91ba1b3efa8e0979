#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domkit::cli {

/// Exit codes: 0 success, 2 usage or domain error, 3 internal consistency failure.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

/// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domkit::cli
