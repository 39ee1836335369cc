#include <iostream>
#include <string>
#include <vector>

#include "cgr_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cgr::cli::run(args, std::cout, std::cerr);
}
