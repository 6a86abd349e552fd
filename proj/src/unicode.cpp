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

#include "arabiclint/unicode.hpp"

namespace arabiclint {

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw Utf8Error("invalid UTF-8 lead byte", i);
    }
    if (i + len > n) throw Utf8Error("truncated UTF-8 sequence", i);
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(bytes[i + k]);
      if ((b & 0xC0) != 0x80) throw Utf8Error("invalid UTF-8 continuation byte", i + k);
      cp = (cp << 6) | (b & 0x3F);
    }
    const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                          (len == 4 && cp < 0x10000);
    if (overlong) throw Utf8Error("overlong UTF-8 encoding", i);
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw Utf8Error("invalid Unicode scalar value", i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t c : text) out += encode_utf8(c);
  return out;
}

namespace chars {

bool is_whitespace(char32_t c) {
  switch (c) {
    case U'\t': case U'\n': case U'\v': case U'\f': case U'\r': case U' ':
    case U'\u0085': case U'\u00A0': case U'\u1680': case U'\u2028':
    case U'\u2029': case U'\u202F': case U'\u205F': case U'\u3000':
      return true;
    default:
      return c >= U'\u2000' && c <= U'\u200A';
  }
}

bool is_word_separator(char32_t c) {
  if (is_whitespace(c)) return true;
  if (c < 0x80) {
    const bool alnum = (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') ||
                       (c >= U'A' && c <= U'Z');
    return !alnum;
  }
  switch (c) {
    case U'\u00AB': case U'\u00BB':  // guillemets
    case U'\u060C': case U'\u060D':  // Arabic comma, date separator
    case U'\u061B': case U'\u061E': case U'\u061F':
    case U'\u066A': case U'\u066B': case U'\u066C': case U'\u066D':
    case U'\u06D4':
    case U'\uFD3E': case U'\uFD3F':  // ornate parentheses
    case U'\uFEFF':
      return true;
    default:
      break;
  }
  // General Punctuation block (dashes, quotes, bidi controls, ZWNJ/ZWJ).
  return c >= U'\u200B' && c <= U'\u206F';
}

}  // namespace chars
}  // namespace arabiclint
