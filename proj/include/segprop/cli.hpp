#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace segprop {

inline constexpr std::string_view kVersion = "0.1.0";

/// Points of a grid flag: "v" (single value), "a,b,c" (list) or
/// "start:stop:count" (inclusive, evenly spaced).
std::vector<double> parse_grid(std::string_view spec);

/// Comma-separated integer list, e.g. "0,1,-2".
std::vector<long> parse_int_list(std::string_view spec);

/// Runs the command line `args` (without the program name). Data goes to
/// `out` unless --output is given; diagnostics go to `err`. Returns the
/// process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segprop
