#include <iostream>
#include <string>
#include <vector>

#include "zksym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zksym::cli::run(args, std::cout, std::cerr);
}
