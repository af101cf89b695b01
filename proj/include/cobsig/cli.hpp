#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cobsig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. Reports go to `out` (or the --out file), diagnostics to
// `err`. Returns 0 on success / all checks holding, 1 on validation or
// inequality failure or an operation error, 2 on usage or file errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cobsig::cli
