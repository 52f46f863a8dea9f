#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steinobd::cli {

// Exit codes: 0 success or "equivalent", 1 well-formed negative answer,
// 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace steinobd::cli
