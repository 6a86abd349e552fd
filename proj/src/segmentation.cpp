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

#include "arabiclint/segmentation.hpp"

#include "arabiclint/unicode.hpp"

namespace arabiclint {

std::string Token::text() const { return encode_utf8(surface); }

Span Sentence::span() const {
  if (tokens.empty()) return {};
  return {tokens.front().span.begin, tokens.back().span.end};
}

NormalizedText normalize(std::u32string_view text, const NormalizationOptions& options) {
  NormalizedText nt;
  nt.original.assign(text);
  nt.normalized.reserve(text.size());
  nt.offset_map.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char32_t c = text[i];
    if (c == chars::kTatweel) continue;
    if (!options.keep_diacritics && chars::is_arabic_diacritic(c)) continue;
    if (options.fold_hamza && chars::is_hamza_alef(c)) c = chars::kBareAlef;
    nt.normalized.push_back(c);
    nt.offset_map.push_back(i);
  }
  return nt;
}

std::u32string normalize_form(std::u32string_view text, const NormalizationOptions& options) {
  std::u32string out = normalize(text, options).normalized;
  std::size_t b = 0;
  std::size_t e = out.size();
  while (b < e && chars::is_whitespace(out[b])) ++b;
  while (e > b && chars::is_whitespace(out[e - 1])) --e;
  return out.substr(b, e - b);
}

std::u32string normalize_form(std::string_view utf8, const NormalizationOptions& options) {
  return normalize_form(std::u32string_view(decode_utf8(utf8)), options);
}

bool is_sentence_terminator(char32_t c) {
  switch (c) {
    case U'.': case U':': case U';': case U'!': case U'?':
    case U'؛':  // Arabic semicolon
    case U'؟':  // Arabic question mark
      return true;
    default:
      return false;
  }
}

std::vector<Token> tokenize(const NormalizedText& nt, std::size_t begin, std::size_t end,
                            std::size_t sentence_index) {
  std::vector<Token> tokens;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && chars::is_word_separator(nt.normalized[i])) ++i;
    if (i >= end) break;
    const std::size_t start = i;
    while (i < end && !chars::is_word_separator(nt.normalized[i])) ++i;
    Token tok;
    tok.surface = nt.normalized.substr(start, i - start);
    tok.span = {nt.offset_map[start], nt.offset_map[i - 1] + 1};
    tok.sentence_index = sentence_index;
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::vector<Token> tokenize(std::u32string_view segment, const NormalizationOptions& options) {
  const NormalizedText nt = normalize(segment, options);
  return tokenize(nt, 0, nt.normalized.size());
}

namespace {

// Length of the blank-line run starting at the newline at `i`, or 0 if the
// newline is not followed by another newline (ignoring horizontal space).
std::size_t blank_line_run(const std::u32string& s, std::size_t i) {
  std::size_t j = i + 1;
  while (j < s.size() && s[j] != U'\n' && chars::is_whitespace(s[j])) ++j;
  if (j < s.size() && s[j] == U'\n') return j - i + 1;
  return 0;
}

}  // namespace

std::vector<Sentence> split_sentences(const NormalizedText& nt) {
  std::vector<Sentence> sentences;
  const std::u32string& s = nt.normalized;
  std::size_t seg_begin = 0;

  auto flush = [&](std::size_t seg_end, std::optional<char32_t> terminator) {
    auto tokens = tokenize(nt, seg_begin, seg_end, sentences.size());
    if (!tokens.empty()) {
      Sentence sentence;
      sentence.index = sentences.size();
      sentence.tokens = std::move(tokens);
      sentence.terminator = terminator;
      sentences.push_back(std::move(sentence));
    }
  };

  std::size_t i = 0;
  while (i < s.size()) {
    if (is_sentence_terminator(s[i])) {
      flush(i, s[i]);
      seg_begin = ++i;
    } else if (s[i] == U'\n') {
      if (const std::size_t run = blank_line_run(s, i); run > 0) {
        flush(i, std::nullopt);
        i += run;
        seg_begin = i;
      } else {
        ++i;
      }
    } else {
      ++i;
    }
  }
  flush(s.size(), std::nullopt);
  return sentences;
}

}  // namespace arabiclint
