#include <iostream>

#include "specmon/cli.hpp"

int main(int argc, char** argv) {
  return specmon::cli::main(argc, argv, std::cout, std::cerr);
}
