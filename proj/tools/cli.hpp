#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sur::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. args excludes the program name. The run record goes to
// out (or --out FILE), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sur::cli
