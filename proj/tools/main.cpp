#include <iostream>
#include <string>
#include <vector>

#include "gensub/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gensub::run(args, std::cout, std::cerr);
}
