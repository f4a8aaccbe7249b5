#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

/// Runs the toricfano command line. `args` excludes the program name.
/// Returns the process exit code: 0 success, 1 I/O or parse error,
/// 2 domain precondition failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
