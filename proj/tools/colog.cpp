#include <iostream>

#include "colog/cli.hpp"

int main(int argc, char** argv) {
  return colog::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
