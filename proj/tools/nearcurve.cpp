#include <iostream>
#include <string>
#include <vector>

#include "nearcurve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nearcurve::run(args, std::cout, std::cerr);
}
