#include <iostream>

#include "clausegen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = clausegen::cli::run(std::move(args));
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
