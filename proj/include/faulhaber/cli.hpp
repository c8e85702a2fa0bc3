#ifndef FAULHABER_CLI_HPP
#define FAULHABER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace faulhaber::cli {

// Exit codes: 0 success, 1 verification mismatch, 2 argument error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faulhaber::cli

#endif
