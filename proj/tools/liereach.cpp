#include <iostream>

#include "liereach/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liereach::run_command(args, std::cout, std::cerr);
}
