#include <iostream>
#include <vector>

#include "satcsp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return satcsp::run_cli(args, std::cout, std::cerr);
}
