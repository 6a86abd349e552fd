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
#include <stdexcept>
#include <string>

namespace arabiclint {

// Failure to load one of the rule databases or configuration files.
class LoadError : public std::runtime_error {
 public:
  explicit LoadError(const std::string& what, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(line ? what + " (line " + std::to_string(*line) + ")" : what),
        line_(line) {}

  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

}  // namespace arabiclint
