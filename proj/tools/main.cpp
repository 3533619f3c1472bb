#include <iostream>
#include <string>
#include <vector>

#include "pick3d/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pick3d::run_cli(args, std::cout, std::cerr);
}
