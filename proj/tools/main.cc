#include <iostream>

#include "hybridtext/cli.h"

int main(int argc, char** argv) {
  return hybridtext::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
