#include <iostream>

#include "kess/cli.hpp"

int main(int argc, char **argv) {
  return kess::cli::run(argc, argv, {std::cin, std::cout, std::cerr});
}
