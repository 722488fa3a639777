#include <iostream>
#include <string>
#include <vector>

#include "seqlab/cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return seqlab::cli::dispatch(args, std::cin, std::cout, std::cerr);
}
