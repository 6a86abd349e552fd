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

#include <stdexcept>
#include <string>
#include <string_view>

namespace arabiclint {

// Raised when a byte sequence is not well-formed UTF-8.
class Utf8Error : public std::runtime_error {
 public:
  Utf8Error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

std::u32string decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t c);

namespace chars {

inline constexpr char32_t kTatweel = U'\u0640';
inline constexpr char32_t kBareAlef = U'\u0627';
inline constexpr char32_t kArabicComma = U'\u060C';

// Short vowels, tanwin, shadda, sukun and the other combining marks of the
// Arabic block, plus the superscript alef.
constexpr bool is_arabic_diacritic(char32_t c) {
  return (c >= U'\u064B' && c <= U'\u065F') || c == U'\u0670';
}

// Alef with hamza above/below, alef with madda, alef wasla.
constexpr bool is_hamza_alef(char32_t c) {
  return c == U'\u0622' || c == U'\u0623' || c == U'\u0625' || c == U'\u0671';
}

bool is_whitespace(char32_t c);

// Characters that separate words without ending a sentence.
bool is_word_separator(char32_t c);

}  // namespace chars
}  // namespace arabiclint
