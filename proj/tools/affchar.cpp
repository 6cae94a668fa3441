#include <iostream>

#include "affchar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return affchar::run(args, std::cout, std::cerr);
}
