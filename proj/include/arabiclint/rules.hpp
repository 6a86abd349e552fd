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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arabiclint/lexicon.hpp"

namespace arabiclint {

// Category labels the engine gives meaning to.
namespace labels {
inline constexpr std::string_view kVerb = "Verbe";
inline constexpr std::string_view kPronoun = "PronomPersonnel";
inline constexpr std::string_view kProperFeminine = "NomPropreFeminin";
inline constexpr std::string_view kProperMasculine = "NomPropreMasculin";
inline constexpr std::string_view kPlural = "NomPluriel";
inline constexpr std::string_view kParticle = "Particule";
inline constexpr std::string_view kPreposition = "Preposition";
}  // namespace labels

// ---------------------------------------------------------------------------
// Structure rules

enum class RuleKind { Verbal, Nominal };
enum class MatchMode { Prefix, Exact };

struct StructureRule {
  std::string id;  // rule text, whitespace-collapsed
  RuleKind kind = RuleKind::Verbal;
  MatchMode mode = MatchMode::Prefix;
  std::vector<std::string> pattern;  // canonical category names

  bool matches(std::span<const std::string> labels) const;
};

struct MatchOutcome {
  bool matched = false;
  std::optional<std::string> rule_id;  // empty on a vacuous match

  static MatchOutcome vacuous() { return {true, std::nullopt}; }
  static MatchOutcome unmatched() { return {false, std::nullopt}; }
  friend bool operator==(const MatchOutcome&, const MatchOutcome&) = default;
};

// Parses a <ReglesApplicables> document. Pattern names must be categories of
// `lexicon` or the literal "verbe" (stored as "Verbe").
std::vector<StructureRule> load_structure_rules(std::string_view document,
                                                const std::vector<Category>& known_categories);
std::vector<StructureRule> load_structure_rules_file(const std::filesystem::path& path,
                                                     const std::vector<Category>& known_categories);

// First rule (document order) whose pattern matches `labels`. An empty label
// sequence matches vacuously.
MatchOutcome match_structure(std::span<const std::string> labels,
                             std::span<const StructureRule> rules);

// ---------------------------------------------------------------------------
// Conjugation rules

enum class TenseContext { PresentSimple, PresentNegation };

enum class SubjectFeature { FeminineSingular, MasculineSingular, FemininePlural, MasculinePlural, Dual };

struct PronounValue {
  std::u32string text;  // normalized
  friend auto operator<=>(const PronounValue&, const PronounValue&) = default;
};

struct NoExplicitSubject {
  friend auto operator<=>(const NoExplicitSubject&, const NoExplicitSubject&) = default;
};

using AgreementKey = std::variant<PronounValue, SubjectFeature, NoExplicitSubject>;

std::string to_string(TenseContext tense);
std::string to_string(SubjectFeature feature);
std::string to_string(const AgreementKey& key);
std::optional<SubjectFeature> parse_subject_feature(std::string_view name);

struct ConjugationRule {
  AgreementKey key;
  TenseContext tense = TenseContext::PresentSimple;
  std::u32string prebase;
  std::u32string postbase;

  std::string id() const;
};

class ConjugationRuleSet {
 public:
  ConjugationRuleSet() = default;
  // Throws LoadError on a duplicate (key, tense) pair.
  explicit ConjugationRuleSet(std::vector<ConjugationRule> rules);

  const std::vector<ConjugationRule>& rules() const { return rules_; }
  const ConjugationRule* find(const AgreementKey& key, TenseContext tense) const;
  std::size_t size() const { return rules_.size(); }

 private:
  std::vector<ConjugationRule> rules_;
};

// Parses <PronomPersonnel valeur="..."> entries, and <TraitSujet valeur="...">
// entries keyed by subject feature (feminine-singular, masculine-plural,
// dual, ...). The root may be a single entry or a container of entries.
ConjugationRuleSet load_conjugation_rules(std::string_view document,
                                          const NormalizationOptions& options = {});
ConjugationRuleSet load_conjugation_rules_file(const std::filesystem::path& path,
                                               const NormalizationOptions& options = {});

}  // namespace arabiclint
