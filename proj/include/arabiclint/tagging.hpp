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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arabiclint/lexicon.hpp"
#include "arabiclint/rules.hpp"
#include "arabiclint/segmentation.hpp"

namespace arabiclint {

struct TaggedToken {
  Token token;
  std::size_t ordinal = 0;  // position in the sentence, unknown words included
  std::vector<MorphAnalysis> candidates;
  std::optional<std::size_t> chosen;
  bool function_word = false;  // every candidate is a particle/preposition

  const MorphAnalysis& analysis() const { return candidates.at(chosen.value_or(0)); }
};

// Label sequence of a sentence. `labels[i]` belongs to token `label_ordinals[i]`.
// Together labels, skipped and unknown account for every token of the sentence.
struct SentenceStructure {
  std::vector<std::string> labels;
  std::vector<std::size_t> label_ordinals;
  std::vector<std::size_t> skipped;
  std::vector<std::size_t> unknown;

  bool contains_verb() const;
  friend bool operator==(const SentenceStructure&, const SentenceStructure&) = default;
};

struct Disambiguation {
  SentenceStructure structure;
  MatchOutcome outcome;
};

// Attaches every analysis to each token. All tokens must be known words;
// an unanalyzable token is a pipeline ordering error (std::logic_error).
// `ordinals` gives each token's position in its sentence (defaults to 0..n-1).
std::vector<TaggedToken> tag_sentence(std::span<const Token> tokens, const Lexicon& lexicon,
                                      const AffixInventory& affixes,
                                      std::span<const std::size_t> ordinals = {});

// Picks one candidate per token: the first assignment, in lexicographic order
// of candidate indices with the leftmost token varying slowest, whose label
// sequence matches a rule. Falls back to all-first candidates when nothing
// matches. Sets `chosen` on every token.
Disambiguation disambiguate(std::vector<TaggedToken>& tagged, std::span<const StructureRule> rules,
                            const Lexicon& lexicon);

// Label sequence of the current choice (first candidate where unset).
SentenceStructure structure_of(std::span<const TaggedToken> tagged, const Lexicon& lexicon);

}  // namespace arabiclint
