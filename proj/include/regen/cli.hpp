#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regen {

inline constexpr const char* kArtifactVersion = "1.0.0";

/// Exit codes: 0 success, 2 validation error, 3 internal invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInternal = 3;

/// Runs one subcommand. `args` excludes the program name. Relative node
/// directories and output files are placed under $REGEN_OUTPUT_DIR when set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regen
