#pragma once

namespace clifford::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Parses the command line and runs verify, sweep or compare. Returns the exit code.
int run_app(int argc, char** argv);

}  // namespace clifford::cli
