#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colog::cli {

// Exit codes.
inline constexpr int kYes = 0;    // true / valid / pass
inline constexpr int kNo = 1;     // false / countermodel / fail
inline constexpr int kUsage = 2;  // usage or input error

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colog::cli
