#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tilelab::cli {

/// Runs one tilelab command line. Returns 0 on success, 2 for invalid input or
/// out-of-scope parameters, 1 for internal failures and failed verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tilelab::cli
