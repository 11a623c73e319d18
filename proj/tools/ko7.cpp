#include <iostream>
#include <string>
#include <vector>

#include "ko7/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ko7::cli::run(args, std::cout, std::cerr);
}
