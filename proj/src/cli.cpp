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

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "arabiclint/errors.hpp"
#include "arabiclint/evaluation.hpp"
#include "arabiclint/report_io.hpp"
#include "arabiclint/unicode.hpp"

namespace arabiclint::cli {

EngineConfig default_config(const std::filesystem::path& data_dir) {
  EngineConfig config;
  config.paths.lexicon = data_dir / "lexicon.xml";
  config.paths.affixes = data_dir / "affixes.conf";
  config.paths.structure_rules = data_dir / "structure_rules.xml";
  config.paths.conjugation_rules = data_dir / "conjugation_rules.xml";
  return config;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

bool parse_bool(const std::string& value, std::size_t line) {
  if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "off" || value == "no") return false;
  throw LoadError("expected a boolean, got '" + value + "'", line);
}

}  // namespace

void apply_config_file(EngineConfig& config, const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  const std::filesystem::path dir = path.parent_path();
  auto resolve = [&](const std::string& v) {
    const std::filesystem::path p(v);
    return p.is_absolute() ? p : dir / p;
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw LoadError(path.string() + ": expected key=value", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "lexicon") config.paths.lexicon = resolve(value);
    else if (key == "affixes") config.paths.affixes = resolve(value);
    else if (key == "structure_rules") config.paths.structure_rules = resolve(value);
    else if (key == "conjugation_rules") config.paths.conjugation_rules = resolve(value);
    else if (key == "fold_hamza") config.normalization.fold_hamza = parse_bool(value, line_no);
    else if (key == "keep_diacritics") config.normalization.keep_diacritics = parse_bool(value, line_no);
    else if (key == "threads") config.threads = static_cast<std::size_t>(std::stoul(value));
    else throw LoadError(path.string() + ": unknown key '" + key + "'", line_no);
  }
}

namespace {

struct Options {
  std::optional<std::string> lexicon;
  std::optional<std::string> affixes;
  std::optional<std::string> structure_rules;
  std::optional<std::string> conjugation_rules;
  std::optional<bool> fold_hamza;
  std::optional<bool> keep_diacritics;
  std::optional<std::size_t> threads;

  std::string input = "-";
  std::string format = "text";
  std::string color = "auto";
  std::string palette;

  std::string corpus;
  bool strict = false;

  std::string word;
};

EngineConfig resolve_config(const Options& opts, const Io& io) {
  EngineConfig config = default_config(io.data_dir);
  if (io.config_env && !io.config_env->empty()) apply_config_file(config, *io.config_env);
  if (opts.lexicon) config.paths.lexicon = *opts.lexicon;
  if (opts.affixes) config.paths.affixes = *opts.affixes;
  if (opts.structure_rules) config.paths.structure_rules = *opts.structure_rules;
  if (opts.conjugation_rules) config.paths.conjugation_rules = *opts.conjugation_rules;
  if (opts.fold_hamza) config.normalization.fold_hamza = *opts.fold_hamza;
  if (opts.keep_diacritics) config.normalization.keep_diacritics = *opts.keep_diacritics;
  if (opts.threads) config.threads = *opts.threads;
  return config;
}

std::string read_input(const std::string& input, std::istream& in) {
  if (input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return read_text_file(input);
}

int cmd_check(const Options& opts, Io& io) {
  const EngineConfig config = resolve_config(opts, io);
  std::string bytes;
  try {
    bytes = read_input(opts.input, io.in);
  } catch (const LoadError& e) {
    io.err << "arabiclint: " << e.what() << '\n';
    return kUsage;
  }
  std::u32string text;
  try {
    text = decode_utf8(bytes);
  } catch (const Utf8Error& e) {
    io.err << "arabiclint: input is not valid UTF-8 (byte " << e.byte_offset() << ")\n";
    return kUsage;
  }
  const Engine engine = load_engine(config.paths, config.normalization);
  const Report report = analyze_text(std::u32string_view(text), engine, {config.threads});

  if (opts.format == "json") {
    io.out << render_json(report);
  } else if (opts.format == "html") {
    io.out << render_html(report, text);
  } else {
    TextRenderOptions render;
    render.color = opts.color == "always" || (opts.color == "auto" && io.out_is_tty);
    if (!opts.palette.empty()) render.palette = Palette::parse(opts.palette);
    render.source_name = opts.input == "-" ? "<stdin>" : opts.input;
    io.out << render_text(report, text, render);
  }
  return report.faults.empty() ? kClean : kFaults;
}

int cmd_eval(const Options& opts, Io& io) {
  const EngineConfig config = resolve_config(opts, io);
  const auto corpus = load_corpus(opts.corpus);
  const Engine engine = load_engine(config.paths, config.normalization);
  const CorpusResult result = run_corpus(corpus, engine, {config.threads});
  io.out << render_corpus_result(result, corpus);
  if (opts.strict && !result.strict_clean()) {
    io.out << "strict: FAILED\n";
    return kFaults;
  }
  if (opts.strict) io.out << "strict: ok\n";
  return kClean;
}

int cmd_rules_validate(const Options& opts, Io& io) {
  const EngineConfig config = resolve_config(opts, io);
  const Engine engine = load_engine(config.paths, config.normalization);

  std::vector<std::string> warnings = engine.lexicon.warnings();
  for (const auto& rule : engine.conjugation_rules.rules()) {
    const auto* pronoun = std::get_if<PronounValue>(&rule.key);
    if (pronoun == nullptr || rule.tense != TenseContext::PresentSimple) continue;
    const bool listed = std::ranges::any_of(engine.lexicon.lookup(pronoun->text), [&](EntryId id) {
      return engine.lexicon.category(engine.lexicon.entries()[id].category).name == labels::kPronoun;
    });
    if (!listed)
      warnings.push_back("conjugation pronoun '" + encode_utf8(pronoun->text) + "' is not a " +
                         std::string(labels::kPronoun) + " in the lexicon");
  }

  const auto verbal = std::ranges::count_if(engine.structure_rules,
                                            [](const StructureRule& r) { return r.kind == RuleKind::Verbal; });
  io.out << "lexicon: " << engine.lexicon.entries().size() << " entries, "
         << engine.lexicon.categories().size() << " categories (" << config.paths.lexicon.string() << ")\n";
  io.out << "affixes: " << engine.affixes.prefixes.size() << " prefixes, " << engine.affixes.suffixes.size()
         << " suffixes, " << engine.affixes.verb_prebases.size() << " verb prebases, "
         << engine.affixes.verb_postbases.size() << " verb postbases (empty affix included)\n";
  io.out << "structure rules: " << engine.structure_rules.size() << " (" << verbal << " verbal, "
         << engine.structure_rules.size() - static_cast<std::size_t>(verbal) << " nominal)\n";
  io.out << "conjugation rules: " << engine.conjugation_rules.size() << "\n";
  for (const auto& w : warnings) io.out << "warning: " << w << '\n';
  return warnings.empty() ? kClean : kFaults;
}

int cmd_lexicon_lookup(const Options& opts, Io& io) {
  const EngineConfig config = resolve_config(opts, io);
  const Engine engine = load_engine(config.paths, config.normalization);
  std::u32string word;
  try {
    word = normalize_form(std::string_view(opts.word), config.normalization);
  } catch (const Utf8Error&) {
    io.err << "arabiclint: word is not valid UTF-8\n";
    return kUsage;
  }
  const auto analyses = analyze_word(word, engine.lexicon, engine.affixes);
  if (analyses.empty()) {
    io.out << encode_utf8(word) << ": unknown\n";
    return kFaults;
  }
  for (const auto& a : analyses) {
    io.out << encode_utf8(word) << ": prefix '" << encode_utf8(a.prefix) << "' base '" << encode_utf8(a.base)
           << "' suffix '" << encode_utf8(a.suffix) << "' " << engine.lexicon.category(a.category).name << '\n';
  }
  return kClean;
}

}  // namespace

int run(const std::vector<std::string>& args, Io& io) {
  CLI::App app{"Rule-based spelling, structure and conjugation checker for Arabic text", "arabiclint"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opts;

  app.add_option("--lexicon", opts.lexicon, "Word dictionary (<MOTS> XML)");
  app.add_option("--affixes", opts.affixes, "Affix inventory file");
  app.add_option("--structure-rules", opts.structure_rules, "Structure rules (<ReglesApplicables> XML)");
  app.add_option("--conjugation-rules", opts.conjugation_rules, "Conjugation rules XML");
  app.add_option("--fold-hamza", opts.fold_hamza, "Fold hamza-carrying alef forms to bare alef (default true)");
  app.add_option("--keep-diacritics", opts.keep_diacritics, "Keep Arabic diacritics (default false)");
  app.add_option("--threads", opts.threads, "Worker threads for sentence analysis (0 = all cores)");

  auto* check = app.add_subcommand("check", "Check a file (or standard input) for faults");
  check->add_option("input", opts.input, "Input file, '-' for standard input");
  check->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "html"}));
  check->add_option("--color", opts.color, "Colorize text output")
      ->check(CLI::IsMember({"auto", "always", "never"}));
  check->add_option("--palette", opts.palette, "Fault colors, e.g. spelling=red,structure=yellow");

  auto* eval = app.add_subcommand("eval", "Score the engine against an annotated corpus");
  eval->add_option("corpus", opts.corpus, "JSON-lines corpus")->required();
  eval->add_flag("--strict", opts.strict, "Fail on any difference outside excluded rows");

  auto* rules = app.add_subcommand("rules", "Rule database utilities");
  rules->require_subcommand(1);
  auto* validate = rules->add_subcommand("validate", "Load all databases and report counts and warnings");

  auto* lexicon = app.add_subcommand("lexicon", "Lexicon utilities");
  lexicon->require_subcommand(1);
  auto* lookup = lexicon->add_subcommand("lookup", "Print every prefix+base+suffix analysis of a word");
  lookup->add_option("word", opts.word, "Word to analyze")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kClean : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opts, io);
    if (eval->parsed()) return cmd_eval(opts, io);
    if (validate->parsed()) return cmd_rules_validate(opts, io);
    if (lookup->parsed()) return cmd_lexicon_lookup(opts, io);
  } catch (const LoadError& e) {
    io.err << "arabiclint: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    io.err << "arabiclint: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace arabiclint::cli
