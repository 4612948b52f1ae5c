// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/recommend/query.hpp"

#include "esdp/common/error.hpp"
#include "esdp/common/strings.hpp"

namespace esdp {

namespace {

bool has_signature(ItemKind kind) {
  return kind == ItemKind::MI || kind == ItemKind::MD || kind == ItemKind::CT;
}

std::string_view before_paren(std::string_view name) {
  const auto paren = name.find('(');
  return paren == std::string_view::npos ? name : name.substr(0, paren);
}

}  // namespace

QuerySketch parse_query(std::string_view raw) {
  QuerySketch sketch;
  sketch.raw = std::string(raw);
  std::string_view text = trim(raw);
  if (text.empty()) throw EmptyQueryError("query is blank");

  if (auto rendered = parse_rendered_item(text)) {
    sketch.kind_hint = rendered->kind;
    sketch.name_fragment = std::string(trim(before_paren(rendered->name)));
    sketch.full_name = rendered->name;
    sketch.exact = true;
    return sketch;
  }

  if (text.starts_with("new ")) {
    sketch.kind_hint = ItemKind::CI;
    text = trim(text.substr(4));
    if (text.empty()) throw EmptyQueryError("query names no type after 'new'");
  }
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  const bool call_form = open != std::string_view::npos && close != std::string_view::npos && close > open;
  if (call_form && !sketch.kind_hint) sketch.kind_hint = ItemKind::MI;
  sketch.exact = text.find("):") != std::string_view::npos ||
                 (open == std::string_view::npos && text.find('.') != std::string_view::npos);
  if (sketch.exact) sketch.full_name = std::string(text);
  sketch.name_fragment = std::string(trim(before_paren(text)));
  if (sketch.name_fragment.empty()) throw EmptyQueryError("query has no name before '('");
  return sketch;
}

std::string_view simple_name(std::string_view item_name) {
  std::string_view head = before_paren(item_name);
  const auto dot = head.rfind('.');
  return dot == std::string_view::npos ? head : head.substr(dot + 1);
}

int match_tier(const QuerySketch& sketch, ItemKind kind, std::string_view item_name) {
  const std::string_view fragment = sketch.name_fragment;
  const bool kind_ok = !sketch.kind_hint || *sketch.kind_hint == kind;
  if (kind_ok) {
    if (sketch.exact && item_name == sketch.full_name) return 3;
    if (item_name == fragment) return 3;
    if (!sketch.exact && has_signature(kind) && before_paren(item_name) == fragment) return 3;
  }
  if (simple_name(item_name) == fragment) return 2;
  if (contains_icase(item_name, fragment)) return 1;
  return 0;
}

}  // namespace esdp
