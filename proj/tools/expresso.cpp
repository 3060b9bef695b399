#include <cstdlib>
#include <iostream>

#include "expresso/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return expresso::cli::run(args, std::cout, std::cerr, std::getenv("EXPRESSO_LIMITS"));
}
