#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treeinv::cli {

/// Runs one command line (without the program name).
/// Returns 0 if every verdict passed, 1 if one failed, 2 on bad input or a
/// resource bound, 3 on a network failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace treeinv::cli
