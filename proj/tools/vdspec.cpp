#include <iostream>
#include <string>
#include <vector>

#include "vdspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return vdspec::cli::run(args, std::cout, std::cerr);
}
