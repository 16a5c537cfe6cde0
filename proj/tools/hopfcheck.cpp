#include <iostream>
#include <string>
#include <vector>

#include "hopf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return hopf::runCli(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "hopfcheck: internal error: " << e.what() << "\n";
    return 3;
  }
}
