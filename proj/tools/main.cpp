#include <iostream>

#include "arbor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return arbor::run_cli(args, std::cout, std::cerr);
}
