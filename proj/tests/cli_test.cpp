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

#include "arabiclint/cli.hpp"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_support.hpp"

namespace arabiclint::cli {
namespace {

using arabiclint::testing::corpus_dir;
using arabiclint::testing::data_dir;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "",
              std::optional<std::string> config_env = std::nullopt) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Io io{in, out, err, false, std::move(config_env), data_dir()};
  args.insert(args.begin(), "arabiclint");
  const int code = run(args, io);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("arabiclint_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name, std::ios::binary) << content;
    return (path_ / name).string();
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(CliCheck, CleanInputExitsZero) {
  const auto r = invoke({"check", "--color", "never"}, "أنتم لم تذهبوا");
  EXPECT_EQ(r.code, kClean);
  EXPECT_EQ(r.out, "no faults found\n");
}

TEST(CliCheck, FaultsExitOne) {
  const auto r = invoke({"check"}, "أنتم لم تذهبون");
  EXPECT_EQ(r.code, kFaults);
  EXPECT_NE(r.out.find("conjugation"), std::string::npos);
  EXPECT_EQ(r.out.find('\033'), std::string::npos);  // auto color, not a tty
}

TEST(CliCheck, JsonFormat) {
  const auto r = invoke({"check", "--format", "json"}, "تذهبن إيمان");
  EXPECT_EQ(r.code, kFaults);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("stats").at("conjugation"), 1);
}

TEST(CliCheck, HtmlFormat) {
  const auto r = invoke({"check", "--format", "html"}, "زززز");
  EXPECT_EQ(r.code, kFaults);
  EXPECT_NE(r.out.find("fault-spelling"), std::string::npos);
}

TEST(CliCheck, ColorAlways) {
  const auto r = invoke({"check", "--color", "always", "--palette", "spelling=green"}, "زززز");
  EXPECT_NE(r.out.find("\033[32m"), std::string::npos);
}

TEST(CliCheck, FileInputNamesSource) {
  TempDir dir;
  const auto file = dir.write("in.txt", "سطر\nأنتم لم تذهبون");
  const auto r = invoke({"check", file});
  EXPECT_EQ(r.code, kFaults);
  EXPECT_NE(r.out.find(file + ":2:9: conjugation"), std::string::npos) << r.out;
}

TEST(CliCheck, MissingFileIsUsageError) {
  EXPECT_EQ(invoke({"check", "/nonexistent/input.txt"}).code, kUsage);
}

TEST(CliCheck, InvalidUtf8IsUsageError) {
  const auto r = invoke({"check"}, std::string("abc\xff\xfe"));
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("UTF-8"), std::string::npos);
}

TEST(CliCheck, BadOptionsAreUsageErrors) {
  EXPECT_EQ(invoke({"check", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"check", "--palette", "spelling=pink"}, "زززز").code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kClean);
}

TEST(CliCheck, EmptyInput) { EXPECT_EQ(invoke({"check"}, "").code, kClean); }

TEST(CliEval, StrictOnShippedTable) {
  const auto r = invoke({"eval", "--strict", (corpus_dir() / "golden.jsonl").string()});
  EXPECT_EQ(r.code, kClean) << r.out << r.err;
  EXPECT_NE(r.out.find("strict: ok"), std::string::npos);
}

TEST(CliEval, StrictFailsOnDifference) {
  TempDir dir;
  const auto corpus = dir.write("c.jsonl", "{\"text\": \"تذهبن إيمان\", \"gold\": []}\n");
  EXPECT_EQ(invoke({"eval", "--strict", corpus}).code, kFaults);
  EXPECT_EQ(invoke({"eval", corpus}).code, kClean);
}

TEST(CliEval, MalformedCorpus) {
  TempDir dir;
  const auto corpus = dir.write("c.jsonl", "{\"text\": 1}\n");
  const auto r = invoke({"eval", corpus});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
}

TEST(CliRules, ValidateShippedData) {
  const auto r = invoke({"rules", "validate"});
  EXPECT_EQ(r.code, kClean) << r.out;
  EXPECT_NE(r.out.find("structure rules: 10 (4 verbal, 6 nominal)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("conjugation rules: 32"), std::string::npos);
}

TEST(CliRules, UnknownCategoryIsUsageError) {
  TempDir dir;
  const auto rules = dir.write("s.xml",
                               "<ReglesApplicables><ReglesPhrasesNominales><regle>Nom Adverbe</regle>"
                               "</ReglesPhrasesNominales></ReglesApplicables>");
  const auto r = invoke({"--structure-rules", rules, "rules", "validate"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("Adverbe"), std::string::npos);
}

TEST(CliRules, DuplicateConjugationIsUsageError) {
  TempDir dir;
  const auto rules = dir.write("c.xml", R"(<ReglesConjugaison>
    <PronomPersonnel valeur="هم"><PresentSimple><prebase>ي</prebase><PostBase>ون</PostBase></PresentSimple></PronomPersonnel>
    <PronomPersonnel valeur="هم"><PresentSimple><prebase>ي</prebase><PostBase>ون</PostBase></PresentSimple></PronomPersonnel>
  </ReglesConjugaison>)");
  EXPECT_EQ(invoke({"--conjugation-rules", rules, "rules", "validate"}).code, kUsage);
}

TEST(CliRules, LexiconWarningsFailValidation) {
  TempDir dir;
  std::ifstream src(data_dir() / "lexicon.xml");
  std::stringstream buf;
  buf << src.rdbuf();
  std::string xml = buf.str();
  xml.insert(xml.rfind("</MOTS>"), "<Verbe>ذهب</Verbe>\n");
  const auto lex = dir.write("lexicon.xml", xml);
  const auto r = invoke({"--lexicon", lex, "rules", "validate"});
  EXPECT_EQ(r.code, kFaults);
  EXPECT_NE(r.out.find("warning: "), std::string::npos);
}

TEST(CliLexicon, Lookup) {
  const auto known = invoke({"lexicon", "lookup", "تذهبون"});
  EXPECT_EQ(known.code, kClean);
  EXPECT_NE(known.out.find("prefix 'ت' base 'ذهب' suffix 'ون' Verbe"), std::string::npos) << known.out;
  const auto unknown = invoke({"lexicon", "lookup", "الجمّة"});
  EXPECT_EQ(unknown.code, kFaults);
  EXPECT_NE(unknown.out.find("unknown"), std::string::npos);
}

TEST(CliConfig, EnvironmentConfigFile) {
  TempDir dir;
  const auto lex = dir.write("lex.xml", "<MOTS><Verbe>ذهب</Verbe><NomPropreFeminin>إيمان</NomPropreFeminin></MOTS>");
  const auto conf = dir.write("arabiclint.conf", "# local override\nlexicon = lex.xml\nthreads = 2\n");
  (void)lex;
  // The shipped structure rules name categories missing from this lexicon.
  const auto r = invoke({"check"}, "تذهب إيمان", conf);
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("NomPropreMasculin"), std::string::npos) << r.err;

  const auto rules = dir.write("s.xml",
                               "<ReglesApplicables><ReglesPhrasesVerbales><regle>verbe NomPropreFeminin</regle>"
                               "</ReglesPhrasesVerbales></ReglesApplicables>");
  dir.write("arabiclint.conf", "lexicon = lex.xml\nstructure_rules = " + rules + "\n");
  EXPECT_EQ(invoke({"check"}, "تذهب إيمان", conf).code, kClean);
  EXPECT_EQ(invoke({"check"}, "تذهب أيمن", conf).code, kFaults);
}

TEST(CliConfig, BadConfigFile) {
  TempDir dir;
  const auto conf = dir.write("bad.conf", "lexicon = x\ncolour = red\n");
  const auto r = invoke({"check"}, "x", conf);
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

}  // namespace
}  // namespace arabiclint::cli
