#include <iostream>
#include <string>
#include <vector>

#include "factorpack/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return factorpack::cli::run(args, std::cout, std::cerr);
}
