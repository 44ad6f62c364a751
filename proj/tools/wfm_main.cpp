#include <iostream>
#include <string>
#include <vector>

#include "wfm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return wfm::cli::run(args, std::cout, std::cerr);
}
