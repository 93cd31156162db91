#include <iostream>

#include "zdci_cli/app.hpp"

int main(int argc, char** argv) {
  return zdci::cli::run(argc, argv, std::cout, std::cerr);
}
