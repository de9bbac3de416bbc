#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyspace::cli {

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 1 on a domain error, 2 on a usage or input error.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace polyspace::cli
