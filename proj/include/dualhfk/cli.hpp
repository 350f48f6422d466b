#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfk {

// Exit-code contract: 0 ok, 2 semantic error, 3 syntax error,
// 4 oracle/stabilization mismatch, 5 precondition or usage error.
enum ExitCode {
  kExitOk = 0,
  kExitSemantic = 2,
  kExitSyntax = 3,
  kExitMismatch = 4,
  kExitPrecondition = 5,
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfk
