#include <iostream>
#include <string>
#include <vector>

#include "adlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return adlab::dispatch(args, std::cout, std::cerr);
}
