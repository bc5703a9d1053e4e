#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwmc {

/// Command-line entry point; `args` excludes the program name.
/// Returns 0 on success, 2 on usage errors, 1 when a run is refused or fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwmc
