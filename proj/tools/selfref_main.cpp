#include <iostream>
#include <string>
#include <vector>

#include "selfref/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return selfref::run_cli(args, std::cout, std::cerr);
}
