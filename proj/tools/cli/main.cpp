// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "dunkl/cli.hpp"

int main(int argc, char** argv) { return dunkl::run_cli(argc, argv, std::cout, std::cerr); }
