#include <iostream>
#include <string>
#include <vector>

#include "cofinite/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cofinite::run_cli(args, std::cout, std::cerr);
}
