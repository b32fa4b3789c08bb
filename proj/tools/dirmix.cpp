#include <iostream>
#include <string>
#include <vector>

#include "dirmix/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dirmix::cli::run(args, std::cout, std::cerr);
}
