#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <unistd.h>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* mode = std::getenv("ASK_COLOR");
  bool color = mode && std::string(mode) == "auto" && isatty(STDERR_FILENO);
  return famcode::cli::run(args, std::cout, std::cerr, color);
}
