#include <iostream>

#include "spinwedge/cli.hpp"

int main(int argc, char** argv) {
  return spinwedge::run_cli(argc, argv, std::cout, std::cerr);
}
