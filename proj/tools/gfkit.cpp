#include <iostream>
#include <string>
#include <vector>

#include "gfkit/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return gfkit::cli::run(args, std::cout, std::cerr);
}
