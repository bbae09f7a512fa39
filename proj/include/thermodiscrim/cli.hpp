#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thermodiscrim::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kValidationError = 2;

// Runs `thermodiscrim <args...>` (args excludes the program name). Reports go
// to `out`, warnings and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thermodiscrim::cli
