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

#include "arabiclint/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "arabiclint/errors.hpp"
#include "arabiclint/lexicon.hpp"

namespace arabiclint {

bool GoldAnnotation::excluded_from_strict() const {
  return note && note->find("excluded-from-strict") != std::string::npos;
}

std::vector<GoldAnnotation> parse_corpus(std::string_view jsonl) {
  std::vector<GoldAnnotation> corpus;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    GoldAnnotation entry;
    entry.line = line_no;
    try {
      const auto j = nlohmann::json::parse(line);
      entry.text = j.at("text").get<std::string>();
      if (j.contains("gold")) {
        for (const auto& g : j.at("gold")) {
          const auto kind = parse_fault_kind(g.at("kind").get<std::string>());
          if (!kind) throw LoadError("unknown fault kind " + g.at("kind").dump(), line_no);
          const auto ordinal = g.at("ordinal").get<long long>();
          if (ordinal < 0) throw LoadError("negative ordinal", line_no);
          entry.gold.push_back({*kind, static_cast<std::size_t>(ordinal)});
        }
      }
      if (j.contains("note") && !j.at("note").is_null()) entry.note = j.at("note").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw LoadError(std::string("corpus parse error: ") + e.what(), line_no);
    }
    corpus.push_back(std::move(entry));
  }
  if (corpus.empty()) throw LoadError("empty corpus");
  return corpus;
}

std::vector<GoldAnnotation> load_corpus(const std::filesystem::path& path) {
  try {
    return parse_corpus(read_text_file(path));
  } catch (const LoadError& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

std::optional<double> PrecisionResult::precision() const {
  if (detected == 0) return std::nullopt;
  return static_cast<double>(true_detected) / static_cast<double>(detected);
}

std::optional<double> PrecisionResult::recall() const {
  if (gold == 0) return std::nullopt;
  return static_cast<double>(true_detected) / static_cast<double>(gold);
}

std::string format_ratio(std::optional<double> value) {
  if (!value) return "n/a";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", *value);
  return buf;
}

namespace {

PrecisionResult count(const EvalSets& sets, std::optional<FaultKind> kind) {
  PrecisionResult r;
  auto wanted = [&](const DetectionKey& k) { return !kind || k.kind == *kind; };
  for (const auto& k : sets.detected) {
    if (!wanted(k)) continue;
    ++r.detected;
    if (sets.gold.contains(k)) ++r.true_detected;
  }
  r.gold = static_cast<std::size_t>(std::count_if(sets.gold.begin(), sets.gold.end(), wanted));
  return r;
}

constexpr FaultKind kKinds[] = {FaultKind::Spelling, FaultKind::Structure, FaultKind::Conjugation};

}  // namespace

PrecisionResult detection_precision(const EvalSets& sets) { return count(sets, std::nullopt); }

PrecisionResult detection_precision(const EvalSets& sets, FaultKind kind) { return count(sets, kind); }

bool CorpusResult::strict_clean() const {
  return std::all_of(diffs.begin(), diffs.end(), [](const RowDiff& d) { return d.excluded; });
}

CorpusResult run_corpus(std::span<const GoldAnnotation> corpus, const Engine& engine,
                        const AnalysisOptions& options) {
  CorpusResult result;
  for (std::size_t item = 0; item < corpus.size(); ++item) {
    const GoldAnnotation& entry = corpus[item];
    const Report report = analyze_text(std::string_view(entry.text), engine, options);

    // Entry-level ordinal of each sentence's first token.
    std::vector<std::size_t> first_ordinal;
    std::size_t tokens = 0;
    for (const auto& s : report.sentences) {
      first_ordinal.push_back(tokens);
      tokens += s.structure.labels.size() + s.structure.skipped.size() + s.structure.unknown.size();
    }

    std::set<DetectionKey> gold;
    std::set<DetectionKey> detected;
    for (const auto& g : entry.gold) {
      if (g.ordinal >= tokens && !(g.kind == FaultKind::Structure && g.ordinal == 0))
        throw LoadError("gold ordinal " + std::to_string(g.ordinal) + " out of range (" +
                            std::to_string(tokens) + " tokens)",
                        entry.line);
      gold.insert({item, g.ordinal, g.kind});
    }
    for (const auto& f : report.faults) {
      const std::size_t base = first_ordinal.at(f.sentence_index);
      detected.insert({item, base + f.token_ordinal, f.kind});
    }

    for (const FaultKind kind : kKinds) {
      RowDiff diff;
      diff.item = item;
      diff.line = entry.line;
      diff.kind = kind;
      diff.excluded = entry.excluded_from_strict();
      for (const auto& k : gold) {
        if (k.kind != kind) continue;
        diff.expected = true;
        if (!detected.contains(k)) diff.missed.push_back(k.ordinal);
      }
      for (const auto& k : detected) {
        if (k.kind != kind) continue;
        diff.actual = true;
        if (!gold.contains(k)) diff.spurious.push_back(k.ordinal);
      }
      if (diff.expected != diff.actual || !diff.missed.empty() || !diff.spurious.empty())
        result.diffs.push_back(std::move(diff));
    }
    result.sets.gold.insert(gold.begin(), gold.end());
    result.sets.detected.insert(detected.begin(), detected.end());
  }
  for (const FaultKind kind : kKinds) result.per_kind[kind] = detection_precision(result.sets, kind);
  result.overall = detection_precision(result.sets);
  return result;
}

namespace {

std::string verdict(bool fault) { return fault ? "(+)" : "(-)"; }

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

}  // namespace

std::string render_corpus_result(const CorpusResult& result, std::span<const GoldAnnotation> corpus) {
  std::ostringstream out;
  char row[128];
  out << "kind          |R|  |D+∩R|  |D+|  precision  recall(extension)\n";
  auto print = [&](const std::string& name, const PrecisionResult& p) {
    std::snprintf(row, sizeof row, "%-12s %4zu %7zu %5zu  %-9s  %s\n", name.c_str(), p.detected,
                  p.true_detected, p.gold, format_ratio(p.precision()).c_str(),
                  format_ratio(p.recall()).c_str());
    out << row;
  };
  for (const auto& [kind, p] : result.per_kind) print(to_string(kind), p);
  print("all", result.overall);

  if (result.diffs.empty()) {
    out << "\nno differences against gold annotations\n";
    return out.str();
  }
  out << "\ndifferences:\n";
  for (const auto& d : result.diffs) {
    out << "  row " << d.item + 1 << " (line " << d.line << ") " << to_string(d.kind) << ": expected "
        << verdict(d.expected) << " got " << verdict(d.actual);
    if (!d.missed.empty()) out << ", missed tokens [" << join(d.missed) << "]";
    if (!d.spurious.empty()) out << ", spurious tokens [" << join(d.spurious) << "]";
    if (d.excluded) out << " (excluded from strict: " << corpus[d.item].note.value_or("") << ")";
    out << "\n    " << corpus[d.item].text << "\n";
  }
  return out.str();
}

}  // namespace arabiclint
