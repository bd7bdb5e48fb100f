#include <iostream>

#include "wsys/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wsys::run_cli(args, std::cout, std::cerr);
}
