#include <iostream>

#include "ncyc/cli.hpp"

int main(int argc, char** argv) {
  return ncyc::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr);
}
