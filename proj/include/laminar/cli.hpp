#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace laminar::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kNoInput = 66;
inline constexpr int kCantCreate = 73;

// argv[0] is the program name.  Reports go to out as "key: value" lines,
// diagnostics to err.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace laminar::cli
