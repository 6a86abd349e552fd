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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arabiclint/lexicon.hpp"
#include "arabiclint/rules.hpp"
#include "arabiclint/segmentation.hpp"
#include "arabiclint/tagging.hpp"

namespace arabiclint {

enum class FaultKind { Spelling, Structure, Conjugation };

std::string to_string(FaultKind kind);
std::optional<FaultKind> parse_fault_kind(std::string_view name);

struct Fault {
  FaultKind kind = FaultKind::Spelling;
  std::size_t sentence_index = 0;
  std::size_t token_ordinal = 0;  // 0 for structure faults
  std::vector<Span> spans;
  std::string message;
  std::optional<std::string> rule_id;

  friend bool operator==(const Fault&, const Fault&) = default;
};

struct SentenceReport {
  std::size_t index = 0;
  Span span;
  SentenceStructure structure;
  MatchOutcome outcome;

  friend bool operator==(const SentenceReport&, const SentenceReport&) = default;
};

struct FaultStats {
  std::size_t spelling = 0;
  std::size_t structure = 0;
  std::size_t conjugation = 0;

  std::size_t total() const { return spelling + structure + conjugation; }
  friend bool operator==(const FaultStats&, const FaultStats&) = default;
};

// Faults are ordered by (sentence_index, first span start, kind).
struct Report {
  std::vector<Fault> faults;
  std::vector<SentenceReport> sentences;
  FaultStats stats;
  std::vector<std::string> warnings;

  friend bool operator==(const Report&, const Report&) = default;
};

// Loaded databases. Immutable once built; safe to share across threads.
struct Engine {
  Lexicon lexicon;
  AffixInventory affixes;
  std::vector<StructureRule> structure_rules;
  ConjugationRuleSet conjugation_rules;
  NormalizationOptions normalization;
};

struct EnginePaths {
  std::filesystem::path lexicon;
  std::filesystem::path affixes;
  std::filesystem::path structure_rules;
  std::filesystem::path conjugation_rules;
};

Engine load_engine(const EnginePaths& paths, const NormalizationOptions& normalization = {});

// Checks subject/verb agreement for every present-tense verb of a
// disambiguated sentence. Does nothing unless the structure has a verb label.
// Missing rules are appended to `warnings`, never reported as faults.
std::vector<Fault> check_conjugation(std::span<const TaggedToken> tagged,
                                     const SentenceStructure& structure, std::size_t sentence_index,
                                     const Engine& engine, std::vector<std::string>& warnings);

struct SentenceResult {
  std::vector<Fault> faults;  // spelling, then structure, then conjugation
  SentenceReport report;
  std::vector<std::string> warnings;
};

SentenceResult analyze_sentence(const Sentence& sentence, const Engine& engine);

struct AnalysisOptions {
  std::size_t threads = 1;  // 0 = hardware concurrency
};

Report analyze_text(std::u32string_view text, const Engine& engine, const AnalysisOptions& options = {});
Report analyze_text(std::string_view utf8, const Engine& engine, const AnalysisOptions& options = {});

}  // namespace arabiclint
