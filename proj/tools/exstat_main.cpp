#include <iostream>
#include <string>
#include <vector>

#include "exstat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return exstat::cli::run(args, std::cout, std::cerr);
}
