#include <iostream>
#include <string>
#include <vector>

#include "cpindex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cpindex::cli::run(args, std::cout, std::cerr);
}
