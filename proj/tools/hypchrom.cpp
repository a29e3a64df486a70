#include <iostream>

#include "hypchrom/cli.hpp"

int main(int argc, char** argv) {
  return hypchrom::run_cli(argc, argv, std::cout, std::cerr);
}
