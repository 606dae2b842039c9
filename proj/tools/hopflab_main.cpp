#include <iostream>

#include "hopflab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopflab::run_cli(args, std::cout, std::cerr);
}
