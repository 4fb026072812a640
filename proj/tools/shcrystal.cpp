#include <iostream>

#include "shifted/cli.hpp"

int main(int argc, char** argv) {
  return shifted::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
