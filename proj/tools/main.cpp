#include <iostream>

#include "steinchar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return steinchar::run(args, std::cout, std::cerr);
}
