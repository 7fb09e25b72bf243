#include <iostream>

#include "sawlab/cli.hpp"

int main(int argc, char** argv) {
  return sawlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
