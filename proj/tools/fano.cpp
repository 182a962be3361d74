#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fano/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  fano::RunOptions options;
  options.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
  return fano::run_command(args, std::cout, std::cerr, options);
}
