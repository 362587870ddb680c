#include <iostream>
#include <vector>

#include "mfan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = mfan::cli::run(args);
  std::cout << result.output;
  return result.exit_code;
}
