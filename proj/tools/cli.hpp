#ifndef MINGRP_TOOLS_CLI_HPP
#define MINGRP_TOOLS_CLI_HPP

#include <iosfwd>

namespace mingrp
{

/// Exit codes: 0 conforming, 1 violation or failure, 2 parse error,
/// 3 unsupported, 4 over the order limit.
enum ExitCode : int
{
  exit_ok = 0,
  exit_failure = 1,
  exit_parse = 2,
  exit_unsupported = 3,
  exit_limit = 4
};

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace mingrp

#endif // MINGRP_TOOLS_CLI_HPP
