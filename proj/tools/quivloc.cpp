#include <iostream>
#include <string>
#include <vector>

#include "quivloc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quivloc::runCommandLine(args, std::cout, std::cerr);
}
