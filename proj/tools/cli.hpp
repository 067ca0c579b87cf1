#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cimset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFalsified = 2;

// `args` excludes the program name. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cimset::cli
