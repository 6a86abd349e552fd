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

#include "arabiclint/report_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "arabiclint/unicode.hpp"

namespace arabiclint {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON

namespace {

json span_json(const Span& s) { return json::array({s.begin, s.end}); }

Span span_from(const json& j) { return {j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()}; }

json optional_string(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::optional<std::string> optional_string_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

}  // namespace

json to_json(const Report& report) {
  json faults = json::array();
  for (const auto& f : report.faults) {
    json spans = json::array();
    for (const auto& s : f.spans) spans.push_back(span_json(s));
    faults.push_back({{"kind", to_string(f.kind)},
                      {"sentence", f.sentence_index},
                      {"token", f.token_ordinal},
                      {"spans", spans},
                      {"message", f.message},
                      {"rule_id", optional_string(f.rule_id)}});
  }
  json sentences = json::array();
  for (const auto& s : report.sentences) {
    sentences.push_back({{"index", s.index},
                         {"span", span_json(s.span)},
                         {"labels", s.structure.labels},
                         {"label_tokens", s.structure.label_ordinals},
                         {"skipped", s.structure.skipped},
                         {"unknown", s.structure.unknown},
                         {"matched", s.outcome.matched},
                         {"rule_id", optional_string(s.outcome.rule_id)}});
  }
  return {{"faults", faults},
          {"sentences", sentences},
          {"stats",
           {{"spelling", report.stats.spelling},
            {"structure", report.stats.structure},
            {"conjugation", report.stats.conjugation}}},
          {"warnings", report.warnings}};
}

Report report_from_json(const json& j) {
  Report report;
  for (const auto& jf : j.at("faults")) {
    Fault f;
    const auto kind = parse_fault_kind(jf.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown fault kind " + jf.at("kind").dump());
    f.kind = *kind;
    f.sentence_index = jf.at("sentence").get<std::size_t>();
    f.token_ordinal = jf.at("token").get<std::size_t>();
    for (const auto& js : jf.at("spans")) f.spans.push_back(span_from(js));
    f.message = jf.at("message").get<std::string>();
    f.rule_id = optional_string_from(jf.at("rule_id"));
    report.faults.push_back(std::move(f));
  }
  for (const auto& js : j.at("sentences")) {
    SentenceReport s;
    s.index = js.at("index").get<std::size_t>();
    s.span = span_from(js.at("span"));
    s.structure.labels = js.at("labels").get<std::vector<std::string>>();
    s.structure.label_ordinals = js.at("label_tokens").get<std::vector<std::size_t>>();
    s.structure.skipped = js.at("skipped").get<std::vector<std::size_t>>();
    s.structure.unknown = js.at("unknown").get<std::vector<std::size_t>>();
    s.outcome.matched = js.at("matched").get<bool>();
    s.outcome.rule_id = optional_string_from(js.at("rule_id"));
    report.sentences.push_back(std::move(s));
  }
  const auto& st = j.at("stats");
  report.stats.spelling = st.at("spelling").get<std::size_t>();
  report.stats.structure = st.at("structure").get<std::size_t>();
  report.stats.conjugation = st.at("conjugation").get<std::size_t>();
  report.warnings = j.at("warnings").get<std::vector<std::string>>();
  return report;
}

std::string render_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Palette

Palette Palette::parse(std::string_view spec) {
  static constexpr std::pair<std::string_view, int> kColors[] = {
      {"black", 30}, {"red", 31},     {"green", 32}, {"yellow", 33},
      {"blue", 34},  {"magenta", 35}, {"cyan", 36},  {"white", 37},
  };
  Palette palette;
  std::string item;
  std::istringstream in{std::string(spec)};
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected KIND=COLOR, got '" + item + "'");
    const auto kind = parse_fault_kind(item.substr(0, eq));
    if (!kind) throw std::invalid_argument("unknown fault kind '" + item.substr(0, eq) + "'");
    const std::string name = item.substr(eq + 1);
    const auto it = std::find_if(std::begin(kColors), std::end(kColors),
                                 [&](const auto& c) { return c.first == name; });
    if (it == std::end(kColors)) throw std::invalid_argument("unknown color '" + name + "'");
    palette.colors[static_cast<std::size_t>(*kind)] = it->second;
  }
  return palette;
}

// ---------------------------------------------------------------------------
// Text

namespace {

struct LineCol {
  std::size_t line = 1;
  std::size_t col = 1;
};

LineCol line_col(std::u32string_view text, std::size_t offset) {
  LineCol lc;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == U'\n') {
      ++lc.line;
      lc.col = 1;
    } else {
      ++lc.col;
    }
  }
  return lc;
}

std::string sgr(int code) { return "\033[" + std::to_string(code) + "m"; }

// Single-line rendering of `range` (newlines shown as spaces).
std::string excerpt(std::u32string_view text, Span range) {
  std::u32string s(text.substr(range.begin, range.size()));
  std::replace(s.begin(), s.end(), U'\n', U' ');
  std::replace(s.begin(), s.end(), U'\r', U' ');
  return encode_utf8(s);
}

}  // namespace

std::string render_text(const Report& report, std::u32string_view original,
                        const TextRenderOptions& options) {
  std::ostringstream out;
  for (const auto& f : report.faults) {
    const Span& primary = f.spans.front();
    const LineCol lc = line_col(original, primary.begin);
    out << options.source_name << ':' << lc.line << ':' << lc.col << ": ";
    if (options.color) out << "\033[1m" << sgr(options.palette.color(f.kind));
    out << to_string(f.kind);
    if (options.color) out << "\033[0m";
    out << ": " << f.message << '\n';

    const Span sentence = f.sentence_index < report.sentences.size()
                              ? report.sentences[f.sentence_index].span
                              : primary;
    out << "    " << excerpt(original, {sentence.begin, primary.begin});
    if (options.color) {
      out << "\033[4m" << sgr(options.palette.color(f.kind)) << excerpt(original, primary) << "\033[0m";
    } else {
      out << '[' << excerpt(original, primary) << ']';
    }
    out << excerpt(original, {primary.end, std::max(primary.end, sentence.end)}) << '\n';
  }
  const FaultStats& st = report.stats;
  if (st.total() == 0) {
    out << "no faults found\n";
  } else {
    out << st.total() << (st.total() == 1 ? " fault" : " faults") << " (spelling " << st.spelling
        << ", structure " << st.structure << ", conjugation " << st.conjugation << ")\n";
  }
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// HTML

namespace {

std::string html_escape(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) {
    switch (c) {
      case U'&': out += "&amp;"; break;
      case U'<': out += "&lt;"; break;
      case U'>': out += "&gt;"; break;
      case U'"': out += "&quot;"; break;
      case U'\n': out += "<br>\n"; break;
      default: out += encode_utf8(c);
    }
  }
  return out;
}

std::string html_escape(std::string_view utf8) { return html_escape(std::u32string_view(decode_utf8(utf8))); }

struct Mark {
  Span span;
  FaultKind kind;
  const std::string* message;
};

}  // namespace

std::string render_html(const Report& report, std::u32string_view original) {
  std::vector<Mark> marks;
  for (const auto& f : report.faults)
    for (const auto& s : f.spans) marks.push_back({s, f.kind, &f.message});
  std::stable_sort(marks.begin(), marks.end(), [](const Mark& a, const Mark& b) {
    if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
    return a.span.end > b.span.end;
  });

  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html lang=\"ar\" dir=\"rtl\">\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>arabiclint report</title>\n<style>\n"
      << "mark.fault-spelling { background: none; color: #c00; text-decoration: underline wavy #c00; }\n"
      << "mark.fault-structure { background: #fff3b0; }\n"
      << "mark.fault-conjugation { background: none; color: #a0a; text-decoration: underline #a0a; }\n"
      << "</style>\n</head>\n<body>\n<div class=\"text\">";

  std::vector<std::size_t> open_ends;  // stack of end offsets of open marks
  std::size_t pos = 0;
  std::size_t next = 0;
  auto close_until = [&](std::size_t at) {
    while (!open_ends.empty() && open_ends.back() <= at) {
      out << html_escape(original.substr(pos, open_ends.back() - pos)) << "</mark>";
      pos = open_ends.back();
      open_ends.pop_back();
    }
  };
  while (next < marks.size()) {
    const Mark& m = marks[next++];
    if (m.span.begin >= original.size() || m.span.size() == 0) continue;
    close_until(m.span.begin);
    out << html_escape(original.substr(pos, m.span.begin - pos));
    pos = m.span.begin;
    std::size_t end = std::min(m.span.end, original.size());
    if (!open_ends.empty()) end = std::min(end, open_ends.back());
    out << "<mark class=\"fault-" << to_string(m.kind) << "\" title=\"" << html_escape(*m.message)
        << "\">";
    open_ends.push_back(end);
  }
  close_until(original.size());
  out << html_escape(original.substr(pos)) << "</div>\n";

  out << "<p class=\"summary\" dir=\"ltr\">" << report.stats.total() << " fault(s): spelling "
      << report.stats.spelling << ", structure " << report.stats.structure << ", conjugation "
      << report.stats.conjugation << "</p>\n</body>\n</html>\n";
  return out.str();
}

}  // namespace arabiclint
