#ifndef SEMPREFETCH_CLI_H_
#define SEMPREFETCH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace semprefetch {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

// Entry point behind the semprefetch binary. `args` excludes the program
// name. Subcommands: analyze, similarity, simulate.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semprefetch

#endif  // SEMPREFETCH_CLI_H_
