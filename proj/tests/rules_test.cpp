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

#include <gtest/gtest.h>

#include "arabiclint/errors.hpp"
#include "test_support.hpp"

namespace arabiclint {
namespace {

using testing::u32;

std::vector<Category> categories(std::initializer_list<const char*> names) {
  std::vector<Category> out;
  for (const char* n : names) out.push_back({n, {}});
  return out;
}

const std::vector<Category> kCategories =
    categories({"NomPropreFeminin", "NomPropreMasculin", "NomPluriel", "Verbe"});

constexpr const char* kStructureListing = R"(
<ReglesApplicables>
  <ReglesPhrasesVerbales>
    <regle>verbe NomPropreFeminin </regle>
    <regle>verbe NomPropreMasculin </regle>
    <regle>verbe NomPluriel </regle>
  </ReglesPhrasesVerbales>
  <ReglesPhrasesNominales>
    <regle>NomPropreFeminin verbe </regle>
    <regle>NomPropreMasculin verbe </regle>
  </ReglesPhrasesNominales>
</ReglesApplicables>)";

constexpr const char* kConjugationListing = R"(
<PronomPersonnel valeur="أنتم">
  <PresentSimple>
    <prebase>ت</prebase>
    <PostBase>ون</PostBase>
  </PresentSimple>
  <PresentNegation>
    <prebase>ت</prebase>
    <PostBase>وا</PostBase>
  </PresentNegation>
</PronomPersonnel>)";

TEST(LoadStructureRules, ReferenceListing) {
  const auto rules = load_structure_rules(kStructureListing, kCategories);
  ASSERT_EQ(rules.size(), 5u);
  EXPECT_EQ(std::count_if(rules.begin(), rules.end(), [](auto& r) { return r.kind == RuleKind::Verbal; }), 3);
  EXPECT_EQ(std::count_if(rules.begin(), rules.end(), [](auto& r) { return r.kind == RuleKind::Nominal; }), 2);
  EXPECT_EQ(rules[0].id, "verbe NomPropreFeminin");
  EXPECT_EQ(rules[0].pattern, (std::vector<std::string>{"Verbe", "NomPropreFeminin"}));
  EXPECT_EQ(rules[0].mode, MatchMode::Prefix);
}

TEST(LoadStructureRules, UnknownCategoryNamesRuleAndCategory) {
  try {
    load_structure_rules(
        "<ReglesApplicables><ReglesPhrasesNominales><regle>Nom Adjectif</regle></ReglesPhrasesNominales>"
        "</ReglesApplicables>",
        categories({"Nom"}));
    FAIL();
  } catch (const LoadError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("Nom Adjectif"), std::string::npos);
    EXPECT_NE(what.find("'Adjectif'"), std::string::npos);
  }
}

TEST(LoadStructureRules, EmptyRuleSet) {
  EXPECT_THROW(load_structure_rules("<ReglesApplicables></ReglesApplicables>", kCategories), LoadError);
}

TEST(LoadStructureRules, ExactModeAttribute) {
  const auto rules = load_structure_rules(
      "<ReglesApplicables><ReglesPhrasesVerbales><regle mode=\"exact\">verbe NomPluriel</regle>"
      "</ReglesPhrasesVerbales></ReglesApplicables>",
      kCategories);
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0].mode, MatchMode::Exact);
}

TEST(MatchStructure, PrefixAndVacuousAndUnmatched) {
  const auto rules = load_structure_rules(kStructureListing, kCategories);
  const std::vector<std::string> two{"Verbe", "NomPropreFeminin"};
  EXPECT_EQ(match_structure(two, rules), (MatchOutcome{true, "verbe NomPropreFeminin"}));
  const std::vector<std::string> longer{"Verbe", "NomPluriel", "NomPropreFeminin", "Verbe"};
  EXPECT_EQ(match_structure(longer, rules), (MatchOutcome{true, "verbe NomPluriel"}));
  EXPECT_EQ(match_structure({}, rules), MatchOutcome::vacuous());
  const std::vector<std::string> bad{"NomPluriel", "NomPluriel"};
  EXPECT_EQ(match_structure(bad, rules), MatchOutcome::unmatched());
}

TEST(MatchStructure, ExactModeRejectsLongerSequences) {
  StructureRule rule{"verbe NomPluriel", RuleKind::Verbal, MatchMode::Exact, {"Verbe", "NomPluriel"}};
  const std::vector<StructureRule> rules{rule};
  const std::vector<std::string> exact{"Verbe", "NomPluriel"};
  const std::vector<std::string> longer{"Verbe", "NomPluriel", "Verbe"};
  EXPECT_TRUE(match_structure(exact, rules).matched);
  EXPECT_FALSE(match_structure(longer, rules).matched);
}

TEST(MatchStructure, AddingRulesNeverUnmatches) {
  const auto rules = load_structure_rules(kStructureListing, kCategories);
  const std::vector<std::vector<std::string>> seqs{
      {"Verbe"}, {"NomPluriel", "Verbe"}, {"Verbe", "NomPluriel"}, {"NomPropreMasculin", "Verbe", "Verbe"}};
  for (std::size_t k = 0; k <= rules.size(); ++k) {
    std::vector<StructureRule> subset(rules.begin(), rules.begin() + static_cast<long>(k));
    std::vector<StructureRule> bigger(rules.begin(), rules.begin() + static_cast<long>(std::min(k + 1, rules.size())));
    for (const auto& s : seqs)
      if (match_structure(s, subset).matched) EXPECT_TRUE(match_structure(s, bigger).matched);
  }
}

TEST(LoadConjugationRules, ReferenceListing) {
  const auto set = load_conjugation_rules(kConjugationListing);
  ASSERT_EQ(set.size(), 2u);
  const AgreementKey key = PronounValue{U"انتم"};
  const auto* simple = set.find(key, TenseContext::PresentSimple);
  const auto* negation = set.find(key, TenseContext::PresentNegation);
  ASSERT_NE(simple, nullptr);
  ASSERT_NE(negation, nullptr);
  EXPECT_EQ(simple->prebase, U"ت");
  EXPECT_EQ(simple->postbase, U"ون");
  EXPECT_EQ(negation->prebase, U"ت");
  EXPECT_EQ(negation->postbase, U"وا");
}

TEST(LoadConjugationRules, DuplicateTenseIsAnError) {
  EXPECT_THROW(load_conjugation_rules(R"(<PronomPersonnel valeur="هم">
      <PresentSimple><prebase>ي</prebase><PostBase>ون</PostBase></PresentSimple>
      <PresentSimple><prebase>ي</prebase><PostBase>ون</PostBase></PresentSimple>
    </PronomPersonnel>)"),
               LoadError);
}

TEST(LoadConjugationRules, FeatureKeyedEntry) {
  const auto set = load_conjugation_rules(R"(<ReglesConjugaison>
      <TraitSujet valeur="feminine-singular">
        <PresentSimple><prebase>ت</prebase><PostBase></PostBase></PresentSimple>
      </TraitSujet>
    </ReglesConjugaison>)");
  ASSERT_EQ(set.size(), 1u);
  const auto* rule = set.find(SubjectFeature::FeminineSingular, TenseContext::PresentSimple);
  ASSERT_NE(rule, nullptr);
  EXPECT_EQ(rule->prebase, U"ت");
  EXPECT_EQ(rule->postbase, U"");
}

TEST(LoadConjugationRules, MissingPostBase) {
  EXPECT_THROW(load_conjugation_rules(
                   R"(<PronomPersonnel valeur="هم"><PresentSimple><prebase>ي</prebase></PresentSimple></PronomPersonnel>)"),
               LoadError);
}

TEST(LoadConjugationRules, UnknownFeature) {
  EXPECT_THROW(load_conjugation_rules(R"(<TraitSujet valeur="plural-ish">
      <PresentSimple><prebase>ي</prebase><PostBase/></PresentSimple></TraitSujet>)"),
               LoadError);
}

TEST(ShippedRules, LoadCleanly) {
  const Engine& e = testing::shipped_engine();
  EXPECT_EQ(e.structure_rules.size(), 10u);
  EXPECT_EQ(e.conjugation_rules.size(), 32u);
  EXPECT_TRUE(e.lexicon.warnings().empty());
}

}  // namespace
}  // namespace arabiclint
