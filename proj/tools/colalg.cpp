#include <iostream>

#include "colalg/cli.hpp"

int main(int argc, char** argv) {
  return colalg::cli_run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
