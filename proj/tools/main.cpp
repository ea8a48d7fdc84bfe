#include <iostream>
#include <string>
#include <vector>

#include "cliquelab/labcli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cliquelab::run_cli(args, std::cout, std::cerr);
}
