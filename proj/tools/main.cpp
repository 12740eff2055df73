#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  hesse_moore::cli::CommandResult r = hesse_moore::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
