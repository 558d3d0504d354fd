// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.h"

int main(int argc, char** argv) {
  return plateflow::cli::RunCli({argv + 1, argv + argc}, std::cout, std::cerr);
}
