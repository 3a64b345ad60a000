#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genusforge::cli {

/// Runs one command. Returns the process exit code:
///   0 success, 1 validation error, 2 mathematical precondition failure,
///   3 I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace genusforge::cli
