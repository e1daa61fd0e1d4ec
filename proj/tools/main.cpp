#include <iostream>
#include <string>
#include <vector>

#include "gammaratio/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gammaratio::cli::run(args, std::cout, std::cerr);
}
