#pragma once

#include <iosfwd>
#include <string>

namespace mckay {

inline constexpr const char* kToolVersion = "0.1.0";

// count/X printed with a fixed number of decimal places from the exact
// fraction, rounding half away from zero (matches the published tables).
std::string format_ratio(unsigned long count, unsigned long x, unsigned places);

// Entry point behind main(): parses argv, runs the subcommand, writes
// reports to `out` and diagnostics to `err`.
// Exit codes: 0 pass, 1 mathematical violation, 2 operational error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mckay
