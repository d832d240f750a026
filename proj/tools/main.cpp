#include <iostream>
#include <string>
#include <vector>

#include "smallcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return smallcover::run_cli(args, std::cin, std::cout, std::cerr);
}
