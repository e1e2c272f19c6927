#include <iostream>
#include <string>
#include <vector>

#include "mzlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const mzlab::CliResult r = mzlab::run_subcommand(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
