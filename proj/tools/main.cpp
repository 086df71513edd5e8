#include <iostream>

#include "lramsey/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lramsey::cli::run(args, std::cout, std::cerr);
}
