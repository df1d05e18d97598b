#ifndef GFKIT_CLI_HPP
#define GFKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gfkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computation error or red verification
inline constexpr int kExitUsage = 2;

// Runs one gfkit command. `args` excludes the program name.
//
//   table <family> [--r R] [--s S] [--m M] [--t T] [--k-max K] [--m-max M]
//   verify <id|all> [--n-max N]
//   remainder <exp|log|log1p-over-x> --r R [--order N]
//   series <exp|log1p|log-geometric|geometric-pow|monomial|constant> [--c C] [--r R] [--degree D] [--order N]
//
// Every command takes --format text|json|csv and --out FILE.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfkit::cli

#endif  // GFKIT_CLI_HPP
