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

#include "arabiclint/rules.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "arabiclint/errors.hpp"
#include "arabiclint/unicode.hpp"
#include "xml_util.hpp"

namespace arabiclint {

// ---------------------------------------------------------------------------
// Structure rules

bool StructureRule::matches(std::span<const std::string> labels) const {
  if (pattern.size() > labels.size()) return false;
  if (mode == MatchMode::Exact && pattern.size() != labels.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), labels.begin());
}

namespace {

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

std::vector<StructureRule> load_structure_rules(std::string_view document,
                                                const std::vector<Category>& known_categories) {
  const detail::XmlTree doc = detail::parse_xml(document);
  const auto& [root_name, root] = detail::root_element(doc);
  if (root_name != "ReglesApplicables")
    throw LoadError("structure rules root element must be <ReglesApplicables>, got <" + root_name + ">");

  auto known = [&](const std::string& name) {
    return std::any_of(known_categories.begin(), known_categories.end(),
                       [&](const Category& c) { return c.name == name; });
  };

  std::vector<StructureRule> rules;
  detail::for_each_element(root, [&](const std::string& group_name, const detail::XmlTree& group) {
    RuleKind kind;
    if (group_name == "ReglesPhrasesVerbales") kind = RuleKind::Verbal;
    else if (group_name == "ReglesPhrasesNominales") kind = RuleKind::Nominal;
    else throw LoadError("unexpected element <" + group_name + "> in <ReglesApplicables>");

    detail::for_each_element(group, [&](const std::string& name, const detail::XmlTree& node) {
      if (name != "regle") throw LoadError("unexpected element <" + name + "> in <" + group_name + ">");
      StructureRule rule;
      rule.kind = kind;
      const auto words = split_words(node.data());
      rule.id = join(words);
      if (words.empty()) throw LoadError("empty <regle> in <" + group_name + ">");
      const std::string mode = detail::attribute(node, "mode", "prefix");
      if (mode == "exact") rule.mode = MatchMode::Exact;
      else if (mode != "prefix")
        throw LoadError("rule '" + rule.id + "': unknown mode '" + mode + "'");
      for (const auto& w : words) {
        if (w == "verbe" || w == labels::kVerb) {
          rule.pattern.emplace_back(labels::kVerb);
        } else if (known(w)) {
          rule.pattern.push_back(w);
        } else {
          throw LoadError("rule '" + rule.id + "' references unknown category '" + w + "'");
        }
      }
      rules.push_back(std::move(rule));
    });
  });
  if (rules.empty()) throw LoadError("empty structure rule set");
  return rules;
}

std::vector<StructureRule> load_structure_rules_file(const std::filesystem::path& path,
                                                     const std::vector<Category>& known_categories) {
  try {
    return load_structure_rules(read_text_file(path), known_categories);
  } catch (const LoadError& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

MatchOutcome match_structure(std::span<const std::string> labels,
                             std::span<const StructureRule> rules) {
  if (labels.empty()) return MatchOutcome::vacuous();
  for (const auto& rule : rules) {
    if (rule.matches(labels)) return {true, rule.id};
  }
  return MatchOutcome::unmatched();
}

// ---------------------------------------------------------------------------
// Conjugation rules

std::string to_string(TenseContext tense) {
  return tense == TenseContext::PresentSimple ? "PresentSimple" : "PresentNegation";
}

namespace {

constexpr std::pair<SubjectFeature, std::string_view> kFeatureNames[] = {
    {SubjectFeature::FeminineSingular, "feminine-singular"},
    {SubjectFeature::MasculineSingular, "masculine-singular"},
    {SubjectFeature::FemininePlural, "feminine-plural"},
    {SubjectFeature::MasculinePlural, "masculine-plural"},
    {SubjectFeature::Dual, "dual"},
};

}  // namespace

std::string to_string(SubjectFeature feature) {
  for (const auto& [f, name] : kFeatureNames)
    if (f == feature) return std::string(name);
  return "?";
}

std::optional<SubjectFeature> parse_subject_feature(std::string_view name) {
  for (const auto& [f, n] : kFeatureNames)
    if (n == name) return f;
  return std::nullopt;
}

std::string to_string(const AgreementKey& key) {
  struct Visitor {
    std::string operator()(const PronounValue& p) const { return encode_utf8(p.text); }
    std::string operator()(SubjectFeature f) const { return to_string(f); }
    std::string operator()(NoExplicitSubject) const { return "no-explicit-subject"; }
  };
  return std::visit(Visitor{}, key);
}

std::string ConjugationRule::id() const { return to_string(key) + "/" + to_string(tense); }

ConjugationRuleSet::ConjugationRuleSet(std::vector<ConjugationRule> rules) : rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (rules_[i].key == rules_[j].key && rules_[i].tense == rules_[j].tense)
        throw LoadError("duplicate conjugation rule " + rules_[i].id());
    }
  }
}

const ConjugationRule* ConjugationRuleSet::find(const AgreementKey& key, TenseContext tense) const {
  for (const auto& r : rules_)
    if (r.key == key && r.tense == tense) return &r;
  return nullptr;
}

namespace {

std::u32string affix_text(const detail::XmlTree& node, const std::string& what,
                          const NormalizationOptions& options) {
  try {
    return normalize_form(std::string_view(node.data()), options);
  } catch (const Utf8Error&) {
    throw LoadError(what + " is not valid UTF-8");
  }
}

void load_entry(const std::string& name, const detail::XmlTree& node,
                const NormalizationOptions& options, std::vector<ConjugationRule>& out) {
  const std::string valeur = detail::attribute(node, "valeur");
  AgreementKey key;
  if (name == "PronomPersonnel") {
    PronounValue pronoun;
    try {
      pronoun.text = normalize_form(std::string_view(valeur), options);
    } catch (const Utf8Error&) {
      throw LoadError("valeur is not valid UTF-8");
    }
    if (pronoun.text.empty()) throw LoadError("<PronomPersonnel> without valeur");
    key = pronoun;
  } else if (name == "TraitSujet") {
    const auto feature = parse_subject_feature(valeur);
    if (!feature) throw LoadError("<TraitSujet> has unknown valeur '" + valeur + "'");
    key = *feature;
  } else {
    throw LoadError("unexpected element <" + name + "> in conjugation rules");
  }

  detail::for_each_element(node, [&](const std::string& tense_name, const detail::XmlTree& tense_node) {
    ConjugationRule rule;
    rule.key = key;
    if (tense_name == "PresentSimple") rule.tense = TenseContext::PresentSimple;
    else if (tense_name == "PresentNegation") rule.tense = TenseContext::PresentNegation;
    else throw LoadError("unknown tense <" + tense_name + "> under '" + valeur + "'");

    const std::string where = "<" + tense_name + "> of '" + valeur + "'";
    int prebases = 0;
    int postbases = 0;
    detail::for_each_element(tense_node, [&](const std::string& part, const detail::XmlTree& part_node) {
      if (part == "prebase") {
        rule.prebase = affix_text(part_node, "prebase", options);
        ++prebases;
      } else if (part == "PostBase") {
        rule.postbase = affix_text(part_node, "PostBase", options);
        ++postbases;
      } else {
        throw LoadError("unexpected element <" + part + "> in " + where);
      }
    });
    if (prebases != 1) throw LoadError(where + " needs exactly one <prebase>");
    if (postbases != 1) throw LoadError(where + " needs exactly one <PostBase>");
    out.push_back(std::move(rule));
  });
}

}  // namespace

ConjugationRuleSet load_conjugation_rules(std::string_view document, const NormalizationOptions& options) {
  const detail::XmlTree doc = detail::parse_xml(document);
  const auto& [root_name, root] = detail::root_element(doc);
  std::vector<ConjugationRule> rules;
  if (root_name == "PronomPersonnel" || root_name == "TraitSujet") {
    load_entry(root_name, root, options, rules);
  } else {
    detail::for_each_element(root, [&](const std::string& name, const detail::XmlTree& node) {
      load_entry(name, node, options, rules);
    });
  }
  if (rules.empty()) throw LoadError("empty conjugation rule set");
  return ConjugationRuleSet(std::move(rules));
}

ConjugationRuleSet load_conjugation_rules_file(const std::filesystem::path& path,
                                               const NormalizationOptions& options) {
  try {
    return load_conjugation_rules(read_text_file(path), options);
  } catch (const LoadError& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

}  // namespace arabiclint
