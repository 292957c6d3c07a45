#include <iostream>
#include <string>
#include <vector>

#include "laminar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return laminar::cli::run(args, std::cout, std::cerr);
}
