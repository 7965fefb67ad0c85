#pragma once

#include <iosfwd>

namespace tamagawa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line tool: subcommands invariants, localdata, torsors,
/// congruence, visibility, scan and verify; `--json` switches to JSON output.
/// Returns 0 on success, 1 when a check fails, 2 on usage or input errors.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tamagawa
