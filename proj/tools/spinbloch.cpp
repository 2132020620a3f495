// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "spinbloch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spinbloch::cli::run(args, std::cin, std::cout, std::cerr);
}
