#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <bideal/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_depth;
  if (const char* d = std::getenv("BIDEAL_DEPTH")) env_depth = d;
  return bideal::cli::run(args, std::cout, std::cerr, env_depth);
}
