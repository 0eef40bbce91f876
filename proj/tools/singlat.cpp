#include "singlat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return singlat::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
