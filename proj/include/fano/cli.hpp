#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fano {

/// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitMismatch = 2;

struct RunOptions {
  /// ANSI emphasis in table output. The executable turns this off when
  /// NO_COLOR is set or stdout is not a terminal.
  bool color = false;
};

/// Runs one subcommand. `args` excludes the program name, e.g.
/// {"predicate", "--k", "4", "--r", "5", "--s", "2"}.
/// Returns 0 on success, 1 on usage or validation errors and 2 when a
/// classification check finds a mismatch.
int run_command(std::span<const std::string> args, std::ostream& out,
                std::ostream& err, RunOptions options = {});

}  // namespace fano
