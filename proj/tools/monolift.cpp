#include <iostream>
#include <string>
#include <vector>

#include "monolift/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monolift::dispatch(args, std::cout, std::cerr);
}
