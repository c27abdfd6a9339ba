#include <iostream>

#include "superhopf/cli.hpp"

int main(int argc, char** argv) {
  return superhopf::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
