#pragma once

#include <iosfwd>

namespace spinwedge {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

/// Entry point of the `spinwedge` tool. Subcommands: wedge, spectrum,
/// closed-form, verify, evolve, export. Results go to `out` (or to the
/// --output file, written via temp file + rename), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinwedge
