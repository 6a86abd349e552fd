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

#include "arabiclint/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "arabiclint/errors.hpp"
#include "arabiclint/unicode.hpp"
#include "xml_util.hpp"

namespace arabiclint {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// AffixInventory

namespace {

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

AffixInventory AffixInventory::parse(std::string_view text, const NormalizationOptions& options) {
  AffixInventory inv;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw LoadError("expected 'key = values' in affix file", line_no);
    const std::string key = trim(std::string_view(content).substr(0, eq));
    std::set<std::u32string>* target = nullptr;
    if (key == "prefixes") target = &inv.prefixes;
    else if (key == "suffixes") target = &inv.suffixes;
    else if (key == "verb_prebases") target = &inv.verb_prebases;
    else if (key == "verb_postbases") target = &inv.verb_postbases;
    else throw LoadError("unknown affix key '" + key + "'", line_no);

    std::istringstream values(content.substr(eq + 1));
    std::string value;
    while (values >> value) {
      std::u32string affix;
      try {
        affix = normalize_form(std::string_view(value), options);
      } catch (const Utf8Error&) {
        throw LoadError("affix is not valid UTF-8", line_no);
      }
      for (char32_t c : affix) {
        if (is_sentence_terminator(c) || chars::is_word_separator(c))
          throw LoadError("affix '" + value + "' contains punctuation", line_no);
      }
      if (!affix.empty()) target->insert(std::move(affix));
    }
  }
  return inv;
}

AffixInventory AffixInventory::load_file(const std::filesystem::path& path,
                                         const NormalizationOptions& options) {
  return parse(read_text_file(path), options);
}

std::set<std::u32string> AffixInventory::analysis_prefixes() const {
  std::set<std::u32string> all = prefixes;
  all.insert(U"");
  all.insert(verb_prebases.begin(), verb_prebases.end());
  return all;
}

std::set<std::u32string> AffixInventory::analysis_suffixes() const {
  std::set<std::u32string> all = suffixes;
  all.insert(U"");
  all.insert(verb_postbases.begin(), verb_postbases.end());
  return all;
}

bool AffixInventory::is_verb_prebase(std::u32string_view affix) const {
  return verb_prebases.contains(std::u32string(affix));
}

// ---------------------------------------------------------------------------
// Lexicon

namespace {

struct LexiconBuilder {
  const NormalizationOptions& options;
  std::vector<Category>& categories;
  std::vector<LexicalEntry>& entries;
  std::vector<std::string>& warnings;
  std::map<std::string, CategoryId> category_ids;
  std::set<std::pair<std::u32string, CategoryId>> seen;

  CategoryId category_for(const std::string& name, const std::vector<std::string>& ancestry) {
    if (const auto it = category_ids.find(name); it != category_ids.end()) {
      if (categories[it->second].ancestry != ancestry)
        warnings.push_back("category <" + name + "> appears under more than one group");
      return it->second;
    }
    const CategoryId id = categories.size();
    categories.push_back({name, ancestry});
    category_ids.emplace(name, id);
    return id;
  }

  void visit(const std::string& name, const detail::XmlTree& node,
             std::vector<std::string>& ancestry) {
    if (detail::has_child_elements(node)) {
      ancestry.push_back(name);
      detail::for_each_element(node, [&](const std::string& child_name,
                                         const detail::XmlTree& child) {
        visit(child_name, child, ancestry);
      });
      ancestry.pop_back();
      return;
    }
    std::u32string word;
    try {
      word = normalize_form(std::string_view(node.data()), options);
    } catch (const Utf8Error&) {
      throw LoadError("element <" + name + "> is not valid UTF-8");
    }
    if (word.empty()) {
      warnings.push_back("empty element <" + name + "> ignored");
      return;
    }
    if (std::any_of(word.begin(), word.end(), chars::is_word_separator))
      throw LoadError("element <" + name + "> must contain exactly one word, got '" +
                      encode_utf8(word) + "'");
    const CategoryId cat = category_for(name, ancestry);
    if (!seen.emplace(word, cat).second) {
      warnings.push_back("duplicate entry '" + encode_utf8(word) + "' in <" + name + ">");
      return;
    }
    entries.push_back({std::move(word), cat});
  }
};

}  // namespace

Lexicon Lexicon::from_xml(std::string_view document, const NormalizationOptions& options) {
  const detail::XmlTree doc = detail::parse_xml(document);
  const auto& [root_name, root] = detail::root_element(doc);
  if (root_name != "MOTS") throw LoadError("lexicon root element must be <MOTS>, got <" + root_name + ">");

  Lexicon lex;
  LexiconBuilder builder{options, lex.categories_, lex.entries_, lex.warnings_, {}, {}};
  std::vector<std::string> ancestry;
  detail::for_each_element(root, [&](const std::string& name, const detail::XmlTree& child) {
    builder.visit(name, child, ancestry);
  });
  if (lex.entries_.empty()) throw LoadError("empty lexicon");

  for (EntryId id = 0; id < lex.entries_.size(); ++id) lex.index_[lex.entries_[id].base].push_back(id);
  return lex;
}

Lexicon Lexicon::load_file(const std::filesystem::path& path, const NormalizationOptions& options) {
  try {
    return from_xml(read_text_file(path), options);
  } catch (const LoadError& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

std::optional<CategoryId> Lexicon::find_category(std::string_view name) const {
  for (CategoryId id = 0; id < categories_.size(); ++id)
    if (categories_[id].name == name) return id;
  return std::nullopt;
}

std::span<const EntryId> Lexicon::lookup(std::u32string_view base) const {
  const auto it = index_.find(std::u32string(base));
  if (it == index_.end()) return {};
  return it->second;
}

// ---------------------------------------------------------------------------
// Analysis

std::vector<MorphAnalysis> analyze_word(std::u32string_view word, const Lexicon& lexicon,
                                        const AffixInventory& affixes) {
  std::vector<MorphAnalysis> out;
  const std::size_t n = word.size();
  if (n == 0) return out;

  std::size_t max_prefix = 0;
  std::size_t max_suffix = 0;
  for (const auto* set : {&affixes.prefixes, &affixes.verb_prebases})
    for (const auto& a : *set) max_prefix = std::max(max_prefix, a.size());
  for (const auto* set : {&affixes.suffixes, &affixes.verb_postbases})
    for (const auto& a : *set) max_suffix = std::max(max_suffix, a.size());

  std::u32string prefix;
  std::u32string suffix;
  for (std::size_t p = 0; p <= std::min(max_prefix, n - 1); ++p) {
    prefix.assign(word.substr(0, p));
    if (!prefix.empty() && !affixes.prefixes.contains(prefix) && !affixes.verb_prebases.contains(prefix))
      continue;
    for (std::size_t s = 0; s <= std::min(max_suffix, n - p - 1); ++s) {
      suffix.assign(word.substr(n - s));
      if (!suffix.empty() && !affixes.suffixes.contains(suffix) &&
          !affixes.verb_postbases.contains(suffix))
        continue;
      const std::u32string_view base = word.substr(p, n - p - s);
      for (const EntryId id : lexicon.lookup(base)) {
        out.push_back({prefix, std::u32string(base), suffix, lexicon.entries()[id].category, id});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const MorphAnalysis& a, const MorphAnalysis& b) {
    if (a.base.size() != b.base.size()) return a.base.size() > b.base.size();
    if (a.prefix.size() != b.prefix.size()) return a.prefix.size() < b.prefix.size();
    return a.entry < b.entry;
  });
  return out;
}

SpellingVerdict check_spelling(std::u32string_view word, const Lexicon& lexicon,
                               const AffixInventory& affixes) {
  return analyze_word(word, lexicon, affixes).empty() ? SpellingVerdict::Unknown
                                                      : SpellingVerdict::Correct;
}

}  // namespace arabiclint
