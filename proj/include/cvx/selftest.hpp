#pragma once

#include <string>
#include <vector>

namespace cvx {

/// Runs the example corpus backing one CLI subcommand and returns stable
/// one-line results. Throws InternalError on any mismatch.
std::vector<std::string> selftest(const std::string& command);

std::vector<std::string> selftest_commands();

} // namespace cvx
