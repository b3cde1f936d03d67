#include <cstdio>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  weyl::CliResult res = weyl::run_cli(args);
  if (!res.out.empty()) std::fwrite(res.out.data(), 1, res.out.size(), stdout);
  if (!res.err.empty()) std::fprintf(stderr, "weylfan: %s\n", res.err.c_str());
  return res.exit_code;
}
