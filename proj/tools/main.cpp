#include <iostream>
#include <string>
#include <vector>

#include "eorb/cli.hpp"

int main(int argc, char** argv) {
  return eorb::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
