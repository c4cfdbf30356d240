#ifndef HRD_CLI_HPP
#define HRD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hrd::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;    // a check subcommand answered false
inline constexpr int kInvalid = 2;  // bad arguments or unparsable input
inline constexpr int kCapped = 3;   // work above a size cap, no --override
inline constexpr int kInternal = 4; // construction or invariant failure

/// Largest n - k that `lowerbound` walks without --override.
inline constexpr int kFamilyCap = 12;

/// Runs one subcommand. `args` excludes the program name. Output goes to
/// `out` only when the command succeeds; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hrd::cli

#endif
