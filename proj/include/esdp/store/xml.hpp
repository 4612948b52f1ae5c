// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace esdp::xml {

/// Escapes for a double-quoted attribute value. Tabs and line breaks become
/// character references so they survive attribute normalization; other C0
/// controls and invalid UTF-8 cannot be represented and become U+FFFD.
std::string escape_attribute(std::string_view value);

/// Escapes element character data.
std::string escape_text(std::string_view value);

/// A parsed element. Character data is concatenated into `text`.
struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::string text;
  long line = 0;
  long column = 0;

  const std::string* attribute(std::string_view key) const;
};

/// Parses a complete document (expat underneath). DOCTYPE declarations are
/// refused. Throws XmlParseError with line/column.
Element parse_document(std::string_view bytes);

/// Strict attribute access for schema validation: construction rejects any
/// attribute outside `allowed`; the getters reject missing or malformed values.
class AttributeReader {
 public:
  AttributeReader(const Element& element, std::initializer_list<std::string_view> allowed);

  const std::string& required(std::string_view key) const;
  long required_long(std::string_view key, long min_value = 0) const;

 private:
  const Element& element_;
};

/// Throws SchemaError unless every child is named `name` and the element has
/// no non-whitespace text.
void expect_only_children(const Element& element, std::initializer_list<std::string_view> names);

}  // namespace esdp::xml
