#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgt {

/// Command-line driver. Returns 0 on success, 1 on verification failure,
/// 2 on usage or parse errors. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgt
