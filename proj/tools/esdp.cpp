// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include <iostream>
#include <string>
#include <vector>

#include "esdp/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return esdp::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
