#include <iostream>

#include "sturm/cli.hpp"

int main(int argc, char** argv) {
  return sturm::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
