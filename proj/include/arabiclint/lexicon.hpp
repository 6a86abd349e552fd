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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arabiclint/segmentation.hpp"

namespace arabiclint {

using CategoryId = std::size_t;
using EntryId = std::size_t;

// Leaf label of the dictionary taxonomy, e.g. NomPropreFeminin. `ancestry`
// lists the enclosing group elements below the <MOTS> root, outermost first.
struct Category {
  std::string name;
  std::vector<std::string> ancestry;
};

struct LexicalEntry {
  std::u32string base;
  CategoryId category = 0;
};

// Closed sets of concatenative affixes. The empty string is always a member
// of `prefixes` and `suffixes`. During analysis verb prebases act as extra
// prefixes and verb postbases as extra suffixes.
struct AffixInventory {
  std::set<std::u32string> prefixes{U""};
  std::set<std::u32string> suffixes{U""};
  std::set<std::u32string> verb_prebases;
  std::set<std::u32string> verb_postbases;

  // Parses the `key = affix affix ...` configuration format.
  static AffixInventory parse(std::string_view text, const NormalizationOptions& options = {});
  static AffixInventory load_file(const std::filesystem::path& path,
                                  const NormalizationOptions& options = {});

  std::set<std::u32string> analysis_prefixes() const;
  std::set<std::u32string> analysis_suffixes() const;
  bool is_verb_prebase(std::u32string_view affix) const;
};

// One prefix + base + suffix decomposition of a surface form.
struct MorphAnalysis {
  std::u32string prefix;
  std::u32string base;
  std::u32string suffix;
  CategoryId category = 0;
  EntryId entry = 0;

  std::u32string surface() const { return prefix + base + suffix; }
  friend bool operator==(const MorphAnalysis&, const MorphAnalysis&) = default;
};

class Lexicon {
 public:
  // Loads a <MOTS> document. Duplicate (base, category) pairs are dropped and
  // reported through `warnings()`.
  static Lexicon from_xml(std::string_view document, const NormalizationOptions& options = {});
  static Lexicon load_file(const std::filesystem::path& path,
                           const NormalizationOptions& options = {});

  const std::vector<Category>& categories() const { return categories_; }
  const std::vector<LexicalEntry>& entries() const { return entries_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  const Category& category(CategoryId id) const { return categories_.at(id); }
  std::optional<CategoryId> find_category(std::string_view name) const;

  // Entries whose base equals `base`, in file order.
  std::span<const EntryId> lookup(std::u32string_view base) const;
  bool contains(std::u32string_view base) const { return !lookup(base).empty(); }

 private:
  std::vector<Category> categories_;
  std::vector<LexicalEntry> entries_;
  std::vector<std::string> warnings_;
  std::unordered_map<std::u32string, std::vector<EntryId>> index_;
};

// Every (prefix, base, suffix) split of `word` whose affixes are in the
// inventory and whose base is in the lexicon, one analysis per entry.
// Ordered by longer base first, then shorter prefix, then file order.
std::vector<MorphAnalysis> analyze_word(std::u32string_view word, const Lexicon& lexicon,
                                        const AffixInventory& affixes);

enum class SpellingVerdict { Correct, Unknown };

SpellingVerdict check_spelling(std::u32string_view word, const Lexicon& lexicon,
                               const AffixInventory& affixes);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace arabiclint
