#include <iostream>
#include <string>
#include <vector>

#include "ztop/cli_core.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ztop::cli_run(args, std::cout, std::cerr);
}
