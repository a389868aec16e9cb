#include <iostream>
#include <string>
#include <vector>

#include "bsk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bsk::cli::run(args, std::cout, std::cerr);
}
