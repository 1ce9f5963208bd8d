#include <iostream>

#include "foxwright/cli.hpp"

int main(int argc, char** argv) {
  return fw::cli::run(argc, argv, std::cout, std::cerr);
}
