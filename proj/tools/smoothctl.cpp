#include <iostream>

#include "smooth/cli.hpp"

int main(int argc, char** argv) {
  return smooth::run_cli(argc, argv, std::cout, std::cerr);
}
