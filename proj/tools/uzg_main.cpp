#include <iostream>

#include "uzg/cli.hpp"

int main(int argc, char** argv) {
  return uzg::run_cli(argc, argv, std::cout, std::cerr);
}
