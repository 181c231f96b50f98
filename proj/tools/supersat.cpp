#include <iostream>
#include <string>
#include <vector>

#include "supersat/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = supersat::cli::run(args);
  std::cout << result.output();
  if (!result.diagnostics.empty()) std::cerr << "supersat: " << result.diagnostics << '\n';
  return result.exit_code;
}
