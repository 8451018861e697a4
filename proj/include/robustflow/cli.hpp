#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace robustflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

// args excludes the program name. Output goes to `out`; diagnostics and the
// machine-readable failure reason go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace robustflow::cli
