#include <iostream>
#include <string>
#include <vector>

#include "sogamma/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sogamma::cli::run(args, std::cout, std::cerr);
}
