#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rly {

/// Exit codes of the command-line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name:
///   verify <file>... --name OBJ [--json]
///   cohomology <file>... --algebra A [--operator T] --rep R --complex ly|ro|rly --max-degree N [--json]
///   classify-extensions <file>... --algebra A --operator T --rep R [--json]
///   deform-check <file>... [--name D] [--order N] [--json]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rly
