#include "dompoly/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return dompoly::run_cli(argc, argv, std::cout, std::cerr);
}
