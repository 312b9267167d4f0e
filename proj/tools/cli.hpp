#ifndef FANO3_TOOLS_CLI_HPP
#define FANO3_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fano3::cli {

// Exit codes: 0 success, 1 self-check failure, 2 usage/input error,
// 3 node-verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fano3::cli

#endif
