#include <iostream>

#include "benford/cli.hpp"

int main(int argc, char** argv) {
  return benford::cli::run(argc, argv, std::cout, std::cerr);
}
