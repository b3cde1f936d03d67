#pragma once

#include <string>
#include <vector>

// Command-line surface. run_cli is the whole program behind a testable
// interface: the binary's main() forwards argv here.
//
// Exit codes: 0 success, 2 bad config, 3 unsupported input or cap exceeded,
// 4 internal invariant violation.

namespace weyl {

struct CliResult {
  int exit_code = 0;
  std::string out;  // stdout payload (JSON envelope or plain message)
  std::string err;  // diagnostic text for nonzero exits
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace weyl
