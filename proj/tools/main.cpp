#include <iostream>

#include "novdef/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return novdef::cli::run(args, std::cout, std::cerr);
}
