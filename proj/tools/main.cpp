#include <iostream>

#include "l2tree/cli.hpp"

int main(int argc, char** argv) {
  return l2tree::run_cli(argc, argv, std::cout, std::cerr);
}
