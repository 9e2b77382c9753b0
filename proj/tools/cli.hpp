#ifndef DIII_TOOLS_CLI_HPP
#define DIII_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace diii::cli {

/// args excludes the program name. Exit codes: 0 success, 1 data error or
/// failed verification, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diii::cli

#endif  // DIII_TOOLS_CLI_HPP
