#include <iostream>

#include "cli.hpp"
#include "sweep.hpp"

int main(int argc, char** argv) {
  burau4::cli::install_interrupt_handlers();
  return burau4::cli::run(argc, argv, std::cout, std::cerr);
}
