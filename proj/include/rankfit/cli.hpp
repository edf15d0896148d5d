#ifndef RANKFIT_CLI_HPP
#define RANKFIT_CLI_HPP

#include <ostream>

namespace rankfit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;    // unreadable file, parse or validation error
inline constexpr int kExitFit = 2;      // insufficient data, singular system, fit failure
inline constexpr int kExitUsage = 64;   // bad flags or invalid parameters

/// Runs the command line. Data and JSON go to `out` (or --output), human
/// summaries and diagnostics to `err`/`out` as documented in the README.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankfit::cli

#endif  // RANKFIT_CLI_HPP
