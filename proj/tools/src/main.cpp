#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const polycone::cli::Outcome o = polycone::cli::run(args);
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}
