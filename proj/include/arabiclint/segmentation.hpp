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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arabiclint {

struct NormalizationOptions {
  bool fold_hamza = true;
  bool keep_diacritics = false;
};

// Half-open range of Unicode scalar offsets into the original text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

// Text with diacritics/tatweel removed. offset_map[i] is the index in
// `original` of normalized character i; it is non-decreasing.
struct NormalizedText {
  std::u32string original;
  std::u32string normalized;
  std::vector<std::size_t> offset_map;
};

struct Token {
  std::u32string surface;  // normalized form
  Span span;               // in the original text
  std::size_t sentence_index = 0;

  std::string text() const;
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;
  std::optional<char32_t> terminator;

  // From the first token start to the last token end.
  Span span() const;
};

NormalizedText normalize(std::u32string_view text, const NormalizationOptions& options = {});

// Normalizes a single word or affix (dictionary entries, rule values).
std::u32string normalize_form(std::u32string_view text, const NormalizationOptions& options = {});
std::u32string normalize_form(std::string_view utf8, const NormalizationOptions& options = {});

bool is_sentence_terminator(char32_t c);

std::vector<Sentence> split_sentences(const NormalizedText& nt);

// Tokenizes normalized characters [begin, end) of `nt`.
std::vector<Token> tokenize(const NormalizedText& nt, std::size_t begin, std::size_t end,
                            std::size_t sentence_index = 0);

// Tokenizes a standalone segment; spans are relative to `segment`.
std::vector<Token> tokenize(std::u32string_view segment, const NormalizationOptions& options = {});

}  // namespace arabiclint
