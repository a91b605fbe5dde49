#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFails = 1;
inline constexpr int kExitInputError = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssf::cli
