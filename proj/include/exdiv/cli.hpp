#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exdiv::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegativeVerdict = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line (without the program name). Writes results to `out`
/// and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Translates a batch spec document into the equivalent argument list.
/// Schema: {"command": "...", "subcommand"?: "...", "<flag>": value, ...}.
std::vector<std::string> args_from_spec(const std::string& json_text);

/// "a l + m eta" rendered compactly, e.g. "l", "η", "-2l+η".
std::string format_curve(long long a, long long m);

}  // namespace exdiv::cli
