#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eorb/root_data.hpp"

namespace eorb::cli {

enum ExitCode : int { ok = 0, failure = 1, not_equal = 2 };

/// Resolves `sl n m`, `classical F n form` or `custom path`.
roots::RootDatum resolve_group(const std::vector<std::string>& tokens);

/// Runs one command. `args` excludes the program name. Worker threads come
/// from EORB_THREADS (default: hardware concurrency); output never depends on it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eorb::cli
