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

#include "xml_util.hpp"

#include <sstream>

#include <boost/property_tree/xml_parser.hpp>

#include "arabiclint/errors.hpp"

namespace arabiclint::detail {

XmlTree parse_xml(std::string_view document) {
  std::istringstream in{std::string(document)};
  XmlTree tree;
  try {
    boost::property_tree::read_xml(in, tree);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw LoadError("malformed XML: " + e.message(), e.line());
  }
  return tree;
}

bool has_child_elements(const XmlTree& node) {
  bool found = false;
  for_each_element(node, [&](const std::string&, const XmlTree&) { found = true; });
  return found;
}

std::string attribute(const XmlTree& node, const std::string& name, const std::string& fallback) {
  return node.get<std::string>("<xmlattr>." + name, fallback);
}

const std::pair<const std::string, XmlTree>& root_element(const XmlTree& doc) {
  const std::pair<const std::string, XmlTree>* root = nullptr;
  for (const auto& child : doc) {
    if (!child.first.empty() && child.first.front() == '<') continue;
    if (root != nullptr) throw LoadError("XML document has more than one root element");
    root = &child;
  }
  if (root == nullptr) throw LoadError("XML document has no root element");
  return *root;
}

}  // namespace arabiclint::detail
