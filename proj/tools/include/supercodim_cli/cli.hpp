#ifndef SUPERCODIM_CLI_HPP
#define SUPERCODIM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace supercodim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIntegrity = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and usage to `err`. Returns the process exit status:
/// 0 success, 1 usage, parse or precondition error, 2 integrity alarm.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supercodim::cli

#endif
