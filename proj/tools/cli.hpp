#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sltr::cli {

inline constexpr int kAffirmative = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

/// Runs one command; args excludes the program name. Key=value report on
/// out, diagnostics on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sltr::cli
