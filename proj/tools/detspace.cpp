#include <iostream>
#include <vector>

#include "detspace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return detspace::cli_run(args, std::cout, std::cerr);
}
