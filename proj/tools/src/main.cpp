#include <iostream>
#include <string>
#include <vector>

#include "qorbit_cli/app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return qorbit::cli::run_cli(args, std::cout, std::cerr);
}
