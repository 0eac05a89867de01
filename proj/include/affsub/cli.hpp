#ifndef AFFSUB_CLI_HPP
#define AFFSUB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace affsub {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;      // certificate or replay failure
inline constexpr int kBadInput = 2;
inline constexpr int kCapExceeded = 3;
} // namespace exit_code

/// Entry point of the command-line tool; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace affsub

#endif
