#include <iostream>

#include "qalloc/cli.hpp"

int main(int argc, char** argv) {
  return qalloc::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
