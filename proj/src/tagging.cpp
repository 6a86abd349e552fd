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

#include "arabiclint/tagging.hpp"

#include <algorithm>
#include <stdexcept>

#include "arabiclint/unicode.hpp"

namespace arabiclint {

bool SentenceStructure::contains_verb() const {
  return std::find(labels.begin(), labels.end(), labels::kVerb) != labels.end();
}

namespace {

bool is_function_category(const std::string& name) {
  return name == labels::kParticle || name == labels::kPreposition;
}

}  // namespace

std::vector<TaggedToken> tag_sentence(std::span<const Token> tokens, const Lexicon& lexicon,
                                      const AffixInventory& affixes,
                                      std::span<const std::size_t> ordinals) {
  std::vector<TaggedToken> tagged;
  tagged.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    TaggedToken t;
    t.token = tokens[i];
    t.ordinal = ordinals.empty() ? i : ordinals[i];
    t.candidates = analyze_word(t.token.surface, lexicon, affixes);
    if (t.candidates.empty())
      throw std::logic_error("tag_sentence: '" + t.token.text() + "' has no lexical analysis");
    t.function_word = std::all_of(t.candidates.begin(), t.candidates.end(), [&](const MorphAnalysis& a) {
      return is_function_category(lexicon.category(a.category).name);
    });
    tagged.push_back(std::move(t));
  }
  return tagged;
}

SentenceStructure structure_of(std::span<const TaggedToken> tagged, const Lexicon& lexicon) {
  SentenceStructure s;
  for (const auto& t : tagged) {
    if (t.function_word) {
      s.skipped.push_back(t.ordinal);
    } else {
      s.labels.push_back(lexicon.category(t.analysis().category).name);
      s.label_ordinals.push_back(t.ordinal);
    }
  }
  return s;
}

Disambiguation disambiguate(std::vector<TaggedToken>& tagged, std::span<const StructureRule> rules,
                            const Lexicon& lexicon) {
  std::vector<std::size_t> content;  // indices of non-function tokens
  for (std::size_t i = 0; i < tagged.size(); ++i)
    if (!tagged[i].function_word) content.push_back(i);

  // A rule constrains only the first |pattern| content tokens, so the
  // lexicographically smallest assignment matching it takes, at each
  // constrained position, the first candidate carrying the required label,
  // and candidate 0 everywhere else. The first matching assignment overall
  // is the smallest of these per-rule minima.
  std::optional<std::vector<std::size_t>> best;
  std::vector<std::size_t> choice(tagged.size());
  for (const auto& rule : rules) {
    if (rule.pattern.size() > content.size()) continue;
    if (rule.mode == MatchMode::Exact && rule.pattern.size() != content.size()) continue;
    std::fill(choice.begin(), choice.end(), 0);
    bool satisfiable = true;
    for (std::size_t k = 0; k < rule.pattern.size() && satisfiable; ++k) {
      const auto& cands = tagged[content[k]].candidates;
      const auto it = std::find_if(cands.begin(), cands.end(), [&](const MorphAnalysis& a) {
        return lexicon.category(a.category).name == rule.pattern[k];
      });
      if (it == cands.end()) satisfiable = false;
      else choice[content[k]] = static_cast<std::size_t>(it - cands.begin());
    }
    if (satisfiable && (!best || choice < *best)) best = choice;
  }

  for (std::size_t i = 0; i < tagged.size(); ++i) tagged[i].chosen = best ? (*best)[i] : 0;

  Disambiguation result;
  result.structure = structure_of(tagged, lexicon);
  result.outcome = match_structure(result.structure.labels, rules);
  return result;
}

}  // namespace arabiclint
