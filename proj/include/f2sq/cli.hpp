#ifndef F2SQ_CLI_HPP
#define F2SQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace f2sq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f2sq::cli

#endif  // F2SQ_CLI_HPP
