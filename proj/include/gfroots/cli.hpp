#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace gfroots {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitMismatch = 3,
};

/// Runs the gfroots command line with `args` (program name excluded).
/// Subcommands: find-roots, gen, count-ops, bench.
int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace gfroots
