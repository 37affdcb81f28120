#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace genpascal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name. Diagnostics are a
/// single line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genpascal::cli
