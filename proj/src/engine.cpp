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

#include "arabiclint/engine.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "arabiclint/errors.hpp"
#include "arabiclint/unicode.hpp"

namespace arabiclint {

std::string to_string(FaultKind kind) {
  switch (kind) {
    case FaultKind::Spelling: return "spelling";
    case FaultKind::Structure: return "structure";
    case FaultKind::Conjugation: return "conjugation";
  }
  return "?";
}

std::optional<FaultKind> parse_fault_kind(std::string_view name) {
  if (name == "spelling") return FaultKind::Spelling;
  if (name == "structure") return FaultKind::Structure;
  if (name == "conjugation") return FaultKind::Conjugation;
  return std::nullopt;
}

Engine load_engine(const EnginePaths& paths, const NormalizationOptions& normalization) {
  Engine engine;
  engine.normalization = normalization;
  engine.lexicon = Lexicon::load_file(paths.lexicon, normalization);
  try {
    engine.affixes = AffixInventory::load_file(paths.affixes, normalization);
  } catch (const LoadError& e) {
    throw LoadError(paths.affixes.string() + ": " + e.what());
  }
  engine.structure_rules = load_structure_rules_file(paths.structure_rules, engine.lexicon.categories());
  engine.conjugation_rules = load_conjugation_rules_file(paths.conjugation_rules, normalization);
  return engine;
}

// ---------------------------------------------------------------------------
// Conjugation

namespace {

const std::u32string kNegationParticles[] = {U"لم", U"لن"};

std::string_view label_of(const TaggedToken& t, const Lexicon& lexicon) {
  return lexicon.category(t.analysis().category).name;
}

TenseContext tense_for(std::span<const TaggedToken> tagged, std::size_t i) {
  if (i == 0) return TenseContext::PresentSimple;
  const TaggedToken& prev = tagged[i - 1];
  if (prev.ordinal + 1 != tagged[i].ordinal) return TenseContext::PresentSimple;
  for (const auto& particle : kNegationParticles)
    if (prev.token.surface == particle) return TenseContext::PresentNegation;
  return TenseContext::PresentSimple;
}

// Subject of the verb at `i`: the nearest content word before it (pronoun,
// proper noun or plural noun), else a proper noun directly after it.
AgreementKey agreement_for(std::span<const TaggedToken> tagged, std::size_t i, const Lexicon& lexicon) {
  for (std::size_t j = i; j-- > 0;) {
    if (tagged[j].function_word) continue;
    const std::string_view label = label_of(tagged[j], lexicon);
    if (label == labels::kPronoun) return PronounValue{tagged[j].analysis().base};
    if (label == labels::kProperFeminine) return SubjectFeature::FeminineSingular;
    if (label == labels::kProperMasculine) return SubjectFeature::MasculineSingular;
    if (label == labels::kPlural) return SubjectFeature::MasculinePlural;
    break;
  }
  for (std::size_t j = i + 1; j < tagged.size(); ++j) {
    if (tagged[j].function_word) continue;
    const std::string_view label = label_of(tagged[j], lexicon);
    if (label == labels::kProperFeminine) return SubjectFeature::FeminineSingular;
    if (label == labels::kProperMasculine) return SubjectFeature::MasculineSingular;
    break;
  }
  return NoExplicitSubject{};
}

std::string single_quoted(std::u32string_view s) { return "'" + encode_utf8(s) + "'"; }

}  // namespace

std::vector<Fault> check_conjugation(std::span<const TaggedToken> tagged,
                                     const SentenceStructure& structure, std::size_t sentence_index,
                                     const Engine& engine, std::vector<std::string>& warnings) {
  std::vector<Fault> faults;
  if (!structure.contains_verb()) return faults;

  for (std::size_t i = 0; i < tagged.size(); ++i) {
    const TaggedToken& verb = tagged[i];
    if (verb.function_word || label_of(verb, engine.lexicon) != labels::kVerb) continue;
    const MorphAnalysis& form = verb.analysis();
    // Only present-tense forms carry a prebase.
    if (!engine.affixes.is_verb_prebase(form.prefix)) continue;

    const TenseContext tense = tense_for(tagged, i);
    const AgreementKey key = agreement_for(tagged, i, engine.lexicon);

    Fault fault;
    fault.kind = FaultKind::Conjugation;
    fault.sentence_index = sentence_index;
    fault.token_ordinal = verb.ordinal;
    fault.spans = {verb.token.span};

    if (std::holds_alternative<NoExplicitSubject>(key)) {
      if (form.suffix.empty()) continue;
      fault.message = "verb " + single_quoted(verb.token.surface) + " carries postbase " +
                      single_quoted(form.suffix) + " but has no explicit subject";
      fault.rule_id = to_string(key) + "/" + to_string(tense);
      faults.push_back(std::move(fault));
      continue;
    }

    const ConjugationRule* rule = engine.conjugation_rules.find(key, tense);
    if (rule == nullptr) {
      warnings.push_back("no conjugation rule for " + to_string(key) + "/" + to_string(tense));
      continue;
    }
    if (rule->prebase == form.prefix && rule->postbase == form.suffix) continue;
    fault.message = "verb " + single_quoted(verb.token.surface) + " does not agree with " + to_string(key) +
                    " (" + to_string(tense) + "): expected prebase " + single_quoted(rule->prebase) +
                    " and postbase " + single_quoted(rule->postbase) + ", found " + single_quoted(form.prefix) +
                    " and " + single_quoted(form.suffix);
    fault.rule_id = rule->id();
    faults.push_back(std::move(fault));
  }
  return faults;
}

// ---------------------------------------------------------------------------
// Sentence and text analysis

SentenceResult analyze_sentence(const Sentence& sentence, const Engine& engine) {
  SentenceResult result;
  result.report.index = sentence.index;
  result.report.span = sentence.span();

  std::vector<Token> known;
  std::vector<std::size_t> known_ordinals;
  std::vector<std::size_t> unknown;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& tok = sentence.tokens[i];
    if (check_spelling(tok.surface, engine.lexicon, engine.affixes) == SpellingVerdict::Unknown) {
      Fault f;
      f.kind = FaultKind::Spelling;
      f.sentence_index = sentence.index;
      f.token_ordinal = i;
      f.spans = {tok.span};
      f.message = "'" + tok.text() + "' is not in the lexicon";
      result.faults.push_back(std::move(f));
      unknown.push_back(i);
    } else {
      known.push_back(tok);
      known_ordinals.push_back(i);
    }
  }

  auto tagged = tag_sentence(known, engine.lexicon, engine.affixes, known_ordinals);
  Disambiguation d = disambiguate(tagged, engine.structure_rules, engine.lexicon);
  d.structure.unknown = std::move(unknown);

  if (!d.outcome.matched && !d.structure.labels.empty()) {
    Fault f;
    f.kind = FaultKind::Structure;
    f.sentence_index = sentence.index;
    f.token_ordinal = 0;
    f.spans = {result.report.span};
    std::string seq;
    for (const auto& l : d.structure.labels) seq += (seq.empty() ? "" : " ") + l;
    f.message = "the structure of the sentence matches no rule [" + seq + "]";
    result.faults.push_back(std::move(f));
  }

  auto conj = check_conjugation(tagged, d.structure, sentence.index, engine, result.warnings);
  result.faults.insert(result.faults.end(), std::make_move_iterator(conj.begin()),
                       std::make_move_iterator(conj.end()));

  result.report.structure = std::move(d.structure);
  result.report.outcome = std::move(d.outcome);
  return result;
}

Report analyze_text(std::u32string_view text, const Engine& engine, const AnalysisOptions& options) {
  const NormalizedText nt = normalize(text, engine.normalization);
  const std::vector<Sentence> sentences = split_sentences(nt);
  std::vector<SentenceResult> results(sentences.size());

  std::size_t threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(sentences.size(), 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < sentences.size(); ++i) results[i] = analyze_sentence(sentences[i], engine);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (sentences.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(sentences.size(), begin + chunk);
      if (begin >= end) break;
      workers.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i) results[i] = analyze_sentence(sentences[i], engine);
      });
    }
  }

  Report report;
  std::set<std::string> seen_warnings;
  for (auto& r : results) {
    for (auto& f : r.faults) report.faults.push_back(std::move(f));
    report.sentences.push_back(std::move(r.report));
    for (auto& w : r.warnings)
      if (seen_warnings.insert(w).second) report.warnings.push_back(std::move(w));
  }
  std::stable_sort(report.faults.begin(), report.faults.end(), [](const Fault& a, const Fault& b) {
    if (a.sentence_index != b.sentence_index) return a.sentence_index < b.sentence_index;
    if (a.spans.front().begin != b.spans.front().begin) return a.spans.front().begin < b.spans.front().begin;
    return a.kind < b.kind;
  });
  for (const auto& f : report.faults) {
    switch (f.kind) {
      case FaultKind::Spelling: ++report.stats.spelling; break;
      case FaultKind::Structure: ++report.stats.structure; break;
      case FaultKind::Conjugation: ++report.stats.conjugation; break;
    }
  }
  return report;
}

Report analyze_text(std::string_view utf8, const Engine& engine, const AnalysisOptions& options) {
  return analyze_text(std::u32string_view(decode_utf8(utf8)), engine, options);
}

}  // namespace arabiclint
