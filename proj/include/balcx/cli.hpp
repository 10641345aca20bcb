#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace balcx {

/// Runs one command line (without the program name). JSON goes to `out`.
/// Returns 0 on success, 1 on a domain error or malformed input (with an
/// {"error": ...} object on `out`), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balcx
