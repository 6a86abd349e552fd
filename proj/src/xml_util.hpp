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

#include <string>
#include <string_view>

#include <boost/property_tree/ptree.hpp>

namespace arabiclint::detail {

using XmlTree = boost::property_tree::ptree;

// Parses an XML document; syntax errors become LoadError with a line number.
XmlTree parse_xml(std::string_view document);

// Element children only (skips <xmlattr>, <xmlcomment> and text nodes).
template <typename Fn>
void for_each_element(const XmlTree& node, Fn&& fn) {
  for (const auto& [name, child] : node) {
    if (!name.empty() && name.front() == '<') continue;
    fn(name, child);
  }
}

bool has_child_elements(const XmlTree& node);

std::string attribute(const XmlTree& node, const std::string& name, const std::string& fallback = {});

// The single top-level element; throws if the document has none.
const std::pair<const std::string, XmlTree>& root_element(const XmlTree& doc);

}  // namespace arabiclint::detail
