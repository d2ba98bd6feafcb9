#include <iostream>
#include <string>
#include <vector>

#include "gridcache/cli.hpp"

int main(int argc, char** argv) {
  return gridcache::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
