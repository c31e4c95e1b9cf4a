#include <iostream>

#include "lcann_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcann::cli::run(args, std::cout, std::cerr, std::cin);
}
