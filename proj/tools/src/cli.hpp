#ifndef RAMIFY_TOOLS_CLI_HPP
#define RAMIFY_TOOLS_CLI_HPP

#include <iosfwd>

namespace ramify::cli
{

constexpr int exit_ok = 0;
constexpr int exit_refusal = 2;
constexpr int exit_usage = 64;
constexpr int exit_parse = 65;
constexpr int exit_violation = 70;
constexpr int exit_failure = 1;

/// Runs one invocation; "-" as an input path reads standard input.
int run(int argc, char const *const *argv, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace ramify::cli

#endif // RAMIFY_TOOLS_CLI_HPP
