#include <iostream>
#include <string>
#include <vector>

#include "swd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return swd::cli::main_entry(args, std::cout, std::cerr);
}
