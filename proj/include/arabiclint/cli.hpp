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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arabiclint/engine.hpp"

namespace arabiclint::cli {

enum ExitCode : int { kClean = 0, kFaults = 1, kUsage = 2 };

struct EngineConfig {
  EnginePaths paths;
  NormalizationOptions normalization;
  std::size_t threads = 1;
};

// Shipped data files under `data_dir`.
EngineConfig default_config(const std::filesystem::path& data_dir);

// Applies a key=value config file (lexicon, affixes, structure_rules,
// conjugation_rules, fold_hamza, keep_diacritics, threads). Relative paths
// resolve against the file's directory. Throws LoadError.
void apply_config_file(EngineConfig& config, const std::filesystem::path& path);

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool out_is_tty = false;
  std::optional<std::string> config_env;  // value of ARABICLINT_CONFIG
  std::filesystem::path data_dir;
};

// Entry point of the arabiclint tool; args[0] is the program name.
int run(const std::vector<std::string>& args, Io& io);

}  // namespace arabiclint::cli
