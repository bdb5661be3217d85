#include <iostream>
#include <string>
#include <vector>

#include "collinear/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return collinear::cli::run(args, std::cout, std::cerr);
}
