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

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arabiclint/engine.hpp"

namespace arabiclint {

struct GoldFault {
  FaultKind kind = FaultKind::Spelling;
  std::size_t ordinal = 0;
};

// One corpus line. `gold` lists the true faults (D+); all other words are
// correct (D-). Ordinals count tokens across the whole entry text.
struct GoldAnnotation {
  std::string text;
  std::vector<GoldFault> gold;
  std::optional<std::string> note;
  std::size_t line = 0;

  // Rows whose note contains "excluded-from-strict" never fail --strict.
  bool excluded_from_strict() const;
};

// Parses the JSON-lines corpus format. Blank lines are skipped; errors name
// the offending line.
std::vector<GoldAnnotation> parse_corpus(std::string_view jsonl);
std::vector<GoldAnnotation> load_corpus(const std::filesystem::path& path);

struct DetectionKey {
  std::size_t item = 0;
  std::size_t ordinal = 0;
  FaultKind kind = FaultKind::Spelling;
  friend auto operator<=>(const DetectionKey&, const DetectionKey&) = default;
};

struct EvalSets {
  std::set<DetectionKey> gold;      // D+
  std::set<DetectionKey> detected;  // R
};

// |D+ ∩ R| / |R|, kept as integer counts.
struct PrecisionResult {
  std::size_t detected = 0;       // |R|
  std::size_t true_detected = 0;  // |D+ ∩ R|
  std::size_t gold = 0;           // |D+|

  std::optional<double> precision() const;
  std::optional<double> recall() const;
};

// "0.75", "1.00", or "n/a" when undefined.
std::string format_ratio(std::optional<double> value);

PrecisionResult detection_precision(const EvalSets& sets);
PrecisionResult detection_precision(const EvalSets& sets, FaultKind kind);

struct RowDiff {
  std::size_t item = 0;
  std::size_t line = 0;
  FaultKind kind = FaultKind::Spelling;
  bool expected = false;  // gold has a fault of this kind
  bool actual = false;    // engine reported one
  std::vector<std::size_t> missed;    // gold ordinals not detected
  std::vector<std::size_t> spurious;  // detected ordinals not in gold
  bool excluded = false;
};

struct CorpusResult {
  EvalSets sets;
  std::map<FaultKind, PrecisionResult> per_kind;
  PrecisionResult overall;
  std::vector<RowDiff> diffs;

  bool strict_clean() const;
};

// Runs the engine over every entry and compares against the annotations.
// Throws LoadError when a gold ordinal is out of range for its entry.
CorpusResult run_corpus(std::span<const GoldAnnotation> corpus, const Engine& engine,
                        const AnalysisOptions& options = {});

std::string render_corpus_result(const CorpusResult& result, std::span<const GoldAnnotation> corpus);

}  // namespace arabiclint
