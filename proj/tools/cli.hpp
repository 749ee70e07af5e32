#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wsp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_violated = 2;
inline constexpr int exit_usage = 64;

// args excludes the program name. Results go to --out when given, else to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsp::cli
