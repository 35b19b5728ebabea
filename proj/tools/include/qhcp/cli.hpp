#ifndef QHCP_CLI_HPP
#define QHCP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qhcp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhcp::cli

#endif  // QHCP_CLI_HPP
