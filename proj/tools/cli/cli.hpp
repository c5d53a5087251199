#pragma once

#include <ostream>

namespace binform::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Entry point shared by the executable and the in-process tests.
/// Environment overrides: BINFORM_TOL (default quadrature tolerance) and
/// BINFORM_THREADS (row-counting parallelism).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace binform::cli
