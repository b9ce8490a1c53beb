#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "incline/matrix.hpp"

namespace incline::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertionFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "boolean", "tropical", "fuzzy-min" / "fuzzy(min)", ..., inline JSON, or a
// path to an incline spec file.
InclineSpec resolve_incline(const std::string& name_or_path);

}  // namespace incline::cli
