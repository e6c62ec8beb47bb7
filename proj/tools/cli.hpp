#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symcalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Strict comma-separated integers; the empty string is the empty list.
/// Throws std::invalid_argument on anything else.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace symcalc::cli
