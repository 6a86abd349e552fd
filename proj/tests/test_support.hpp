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

#include <string>
#include <string_view>

#include "arabiclint/engine.hpp"
#include "arabiclint/unicode.hpp"

namespace arabiclint::testing {

inline std::u32string u32(std::string_view utf8) { return decode_utf8(utf8); }
inline std::string u8(std::u32string_view s) { return encode_utf8(s); }

inline std::filesystem::path data_dir() { return ARABICLINT_DATA_DIR; }
inline std::filesystem::path corpus_dir() { return ARABICLINT_CORPUS_DIR; }

inline EnginePaths shipped_paths() {
  return {data_dir() / "lexicon.xml", data_dir() / "affixes.conf", data_dir() / "structure_rules.xml",
          data_dir() / "conjugation_rules.xml"};
}

inline const Engine& shipped_engine() {
  static const Engine engine = load_engine(shipped_paths());
  return engine;
}

}  // namespace arabiclint::testing
