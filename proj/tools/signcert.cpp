#include <iostream>

#include "signcert/cli.hpp"

int main(int argc, char** argv) {
  const auto result = signcert::cli::main_entry(argc, argv, std::cin);
  std::cout << result.output << std::flush;
  return result.exit_code;
}
