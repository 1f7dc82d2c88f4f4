#include <iostream>

#include "mgdom/cli.hpp"

int main(int argc, char** argv) {
  return mgdom::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
