// Copyright 2026 The arabiclint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "arabiclint/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv, argv + argc);
  arabiclint::cli::Io io{std::cin, std::cout, std::cerr};
  io.out_is_tty = isatty(STDOUT_FILENO) != 0;
  if (const char* env = std::getenv("ARABICLINT_CONFIG")) io.config_env = env;
  if (const char* dir = std::getenv("ARABICLINT_DATA_DIR")) {
    io.data_dir = dir;
  } else {
    io.data_dir = ARABICLINT_DATA_DIR;
  }
  return arabiclint::cli::run(args, io);
}
