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

#include <array>
#include <string>
#include <string_view>

#include "json.hpp"

#include "arabiclint/engine.hpp"

namespace arabiclint {

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

// Two-space indented JSON followed by a newline.
std::string render_json(const Report& report);

// ANSI SGR foreground codes, indexed by FaultKind.
struct Palette {
  std::array<int, 3> colors{31, 33, 35};  // red, yellow, magenta

  int color(FaultKind kind) const { return colors[static_cast<std::size_t>(kind)]; }

  // "spelling=red,conjugation=cyan"; unspecified kinds keep their color.
  // Throws std::invalid_argument on unknown kinds or color names.
  static Palette parse(std::string_view spec);
};

struct TextRenderOptions {
  bool color = false;
  Palette palette;
  std::string source_name = "<stdin>";
};

// One diagnostic per fault (source:line:col: kind: message) followed by the
// sentence with the fault span highlighted, then a summary line. Text is
// emitted in logical order; bidi layout is left to the terminal.
std::string render_text(const Report& report, std::u32string_view original,
                        const TextRenderOptions& options);

// Standalone HTML page; each fault span is wrapped in <mark class="fault-KIND">.
std::string render_html(const Report& report, std::u32string_view original);

}  // namespace arabiclint
