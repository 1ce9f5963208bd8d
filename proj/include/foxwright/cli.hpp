#ifndef FOXWRIGHT_CLI_HPP
#define FOXWRIGHT_CLI_HPP

#include <iosfwd>

namespace fw::cli {

// Exit codes: 0 all checks passed, 1 at least one check failed or passed only
// conditionally, 2 usage/parse error, 3 numerical error (domain violation,
// range overflow, non-convergence).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fw::cli

#endif  // FOXWRIGHT_CLI_HPP
