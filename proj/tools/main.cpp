#include "sdalg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  auto parsed = sdalg::cli::parse_args(argc, argv);
  auto result = parsed.config ? sdalg::cli::run(*parsed.config) : parsed.early;
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
