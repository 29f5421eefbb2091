#include <iostream>
#include <string>
#include <vector>

#include "pds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pds::run_cli(args, std::cout, std::cerr);
}
