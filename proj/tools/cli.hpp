// SPDX-License-Identifier: Apache-2.0

#ifndef MDSLIFT_TOOLS_CLI_HPP
#define MDSLIFT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mdslift::cli {

/// Exit codes: 0 success or true verdict, 1 false verdict or recoverable
/// domain failure, 2 usage or parameter error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mdslift::cli

#endif // MDSLIFT_TOOLS_CLI_HPP
