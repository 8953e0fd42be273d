#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;

/// Runs the workbench with `args` (program name excluded). Diagnostics go to
/// `err` as one JSON object per failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seir::cli
