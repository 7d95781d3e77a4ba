#include <iostream>

#include "lucas_cli/cli.hpp"

int main(int argc, char** argv) {
  return lucas::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
