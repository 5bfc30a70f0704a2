#include <iostream>

#include "bcfusion/cli.hpp"

int main(int argc, char** argv) {
  return bcfusion::cli::main_entry(argc, argv, std::cout, std::cerr);
}
