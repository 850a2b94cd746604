#include <iostream>

#include "biwave/cli.hpp"

int main(int argc, char** argv) {
  return biwave::cli_execute({argv + 1, argv + argc}, std::cout, std::cerr);
}
