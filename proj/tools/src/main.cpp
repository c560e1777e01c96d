#include <iostream>

#include "we/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return we::run_cli(args, std::cout, std::cerr);
}
