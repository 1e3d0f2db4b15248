#include <iostream>
#include <string>
#include <vector>

#include "cove/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cove::cli::run(args, std::cout, std::cerr);
}
