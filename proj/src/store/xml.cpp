// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/store/xml.hpp"

#include <expat.h>

#include <algorithm>
#include <limits>
#include <memory>

#include "esdp/common/error.hpp"
#include "esdp/common/strings.hpp"

namespace esdp::xml {

namespace {

constexpr std::string_view kReplacement = "\xEF\xBF\xBD";

std::string escape(std::string_view raw, bool attribute) {
  const std::string value = sanitize_utf8(raw);
  std::string out;
  out.reserve(value.size() + 8);
  for (const char c : value) {
    switch (c) {
      case '&': out.append("&amp;"); break;
      case '<': out.append("&lt;"); break;
      case '>': out.append("&gt;"); break;
      case '"':
        if (attribute) {
          out.append("&quot;");
        } else {
          out.push_back(c);
        }
        break;
      case '\t': out.append(attribute ? "&#9;" : "\t"); break;
      case '\n': out.append(attribute ? "&#10;" : "\n"); break;
      case '\r': out.append("&#13;"); break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out.append(kReplacement);
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

struct ParseState {
  XML_Parser parser = nullptr;
  Element root;
  std::vector<Element*> stack;
  bool have_root = false;
  bool doctype = false;
};

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
  auto* state = static_cast<ParseState*>(data);
  Element element;
  element.name = name;
  element.line = static_cast<long>(XML_GetCurrentLineNumber(state->parser));
  element.column = static_cast<long>(XML_GetCurrentColumnNumber(state->parser)) + 1;
  for (std::size_t i = 0; attrs[i] != nullptr; i += 2) element.attributes.emplace_back(attrs[i], attrs[i + 1]);
  if (state->stack.empty()) {
    state->root = std::move(element);
    state->have_root = true;
    state->stack.push_back(&state->root);
  } else {
    auto& children = state->stack.back()->children;
    children.push_back(std::move(element));
    state->stack.push_back(&children.back());
  }
}

void XMLCALL on_end(void* data, const XML_Char*) {
  auto* state = static_cast<ParseState*>(data);
  if (!state->stack.empty()) state->stack.pop_back();
}

void XMLCALL on_text(void* data, const XML_Char* text, int len) {
  auto* state = static_cast<ParseState*>(data);
  if (!state->stack.empty()) state->stack.back()->text.append(text, static_cast<std::size_t>(len));
}

void XMLCALL on_doctype(void* data, const XML_Char*, const XML_Char*, const XML_Char*, int) {
  auto* state = static_cast<ParseState*>(data);
  state->doctype = true;
  XML_StopParser(state->parser, XML_FALSE);
}

}  // namespace

std::string escape_attribute(std::string_view value) { return escape(value, true); }

std::string escape_text(std::string_view value) { return escape(value, false); }

const std::string* Element::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

Element parse_document(std::string_view bytes) {
  if (bytes.size() > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
    throw XmlParseError("document too large", 0, 0);
  }
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(XML_ParserCreate("UTF-8"),
                                                                                        &XML_ParserFree);
  if (!parser) throw Error("cannot create XML parser");
  ParseState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);
  XML_SetStartDoctypeDeclHandler(parser.get(), on_doctype);
  // Child vectors grow while parsing; pointers into them would dangle, so
  // children are appended only to the innermost open element, which is
  // never reallocated while it is open.
  const auto status = XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE);
  const long line = static_cast<long>(XML_GetCurrentLineNumber(parser.get()));
  const long column = static_cast<long>(XML_GetCurrentColumnNumber(parser.get())) + 1;
  if (state.doctype) throw XmlParseError("DOCTYPE declarations are not allowed", line, column);
  if (status != XML_STATUS_OK) throw XmlParseError(XML_ErrorString(XML_GetErrorCode(parser.get())), line, column);
  if (!state.have_root) throw XmlParseError("no root element", line, column);
  return std::move(state.root);
}

AttributeReader::AttributeReader(const Element& element, std::initializer_list<std::string_view> allowed)
    : element_(element) {
  for (const auto& [key, value] : element.attributes) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw SchemaError("unknown attribute '" + key + "' on <" + element.name + "> at line " +
                        std::to_string(element.line));
    }
  }
}

const std::string& AttributeReader::required(std::string_view key) const {
  const std::string* value = element_.attribute(key);
  if (value == nullptr) {
    throw SchemaError("missing attribute '" + std::string(key) + "' on <" + element_.name + "> at line " +
                      std::to_string(element_.line));
  }
  return *value;
}

long AttributeReader::required_long(std::string_view key, long min_value) const {
  const std::string& text = required(key);
  const auto value = parse_long(text);
  if (!value || *value < min_value) {
    throw SchemaError("attribute '" + std::string(key) + "' on <" + element_.name + "> at line " +
                      std::to_string(element_.line) + " is not an integer >= " + std::to_string(min_value));
  }
  return *value;
}

void expect_only_children(const Element& element, std::initializer_list<std::string_view> names) {
  if (!trim(element.text).empty()) {
    throw SchemaError("unexpected text inside <" + element.name + "> at line " + std::to_string(element.line));
  }
  for (const auto& child : element.children) {
    if (std::find(names.begin(), names.end(), child.name) == names.end()) {
      throw SchemaError("unknown element <" + child.name + "> inside <" + element.name + "> at line " +
                        std::to_string(child.line));
    }
  }
}

}  // namespace esdp::xml
