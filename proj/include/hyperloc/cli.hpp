#ifndef HYPERLOC_CLI_HPP
#define HYPERLOC_CLI_HPP

#include <ostream>

namespace hyperloc
{

// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_usage = 64;

// Entry point of the `hyperloc` tool. Reports go to `out` as JSON (sorted
// keys); validation errors are also JSON on `out`; usage errors go to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace hyperloc

#endif
