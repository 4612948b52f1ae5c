// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/abstract/item.hpp"

#include <cstdio>

#include "esdp/common/strings.hpp"

namespace esdp {

const std::array<ItemKindInfo, kItemKindCount>& item_kind_catalog() {
  static const std::array<ItemKindInfo, kItemKindCount> catalog = {{
      {ItemKind::PK, "PK", "package declaration"},
      {ItemKind::IM, "IM", "import declaration"},
      {ItemKind::CD, "CD", "class declaration"},
      {ItemKind::ID, "ID", "interface declaration"},
      {ItemKind::ED, "ED", "enum declaration"},
      {ItemKind::XT, "XT", "extends clause"},
      {ItemKind::IP, "IP", "implements clause"},
      {ItemKind::FD, "FD", "field declaration"},
      {ItemKind::MD, "MD", "method declaration"},
      {ItemKind::CT, "CT", "constructor declaration"},
      {ItemKind::PM, "PM", "parameter declaration"},
      {ItemKind::VD, "VD", "local variable declaration"},
      {ItemKind::MI, "MI", "method invocation"},
      {ItemKind::CI, "CI", "class instantiation"},
      {ItemKind::FA, "FA", "field access"},
      {ItemKind::CS, "CS", "cast expression"},
      {ItemKind::EH, "EH", "exception handling"},
  }};
  return catalog;
}

std::string_view code(ItemKind kind) { return item_kind_catalog()[static_cast<std::size_t>(kind)].code; }

std::string_view description(ItemKind kind) {
  return item_kind_catalog()[static_cast<std::size_t>(kind)].description;
}

std::optional<ItemKind> parse_item_kind(std::string_view text) {
  for (const auto& info : item_kind_catalog()) {
    if (info.code == text) return info.kind;
  }
  return std::nullopt;
}

bool is_class_level(ItemKind kind) {
  switch (kind) {
    case ItemKind::PK:
    case ItemKind::IM:
    case ItemKind::CD:
    case ItemKind::ID:
    case ItemKind::ED:
    case ItemKind::XT:
    case ItemKind::IP:
    case ItemKind::FD:
    case ItemKind::MD:
    case ItemKind::CT:
      return true;
    default:
      return false;
  }
}

std::string render_item(const Item& item) {
  char line[24];
  std::snprintf(line, sizeof line, "%02d", item.line);
  std::string out;
  out.append(code(item.kind)).append(", ").append(item.name).append(", ").append(item.entity);
  out.push_back(':');
  out.append(line);
  return out;
}

std::optional<Item> parse_rendered_item(std::string_view text) {
  const auto first = text.find(", ");
  const auto last = text.rfind(", ");
  const auto colon = text.rfind(':');
  if (first == std::string_view::npos || last == first || colon == std::string_view::npos || colon < last) {
    return std::nullopt;
  }
  const auto kind = parse_item_kind(text.substr(0, first));
  const auto line = parse_long(text.substr(colon + 1));
  if (!kind || !line || *line < 1 || *line > 0x7fffffff) return std::nullopt;
  Item item;
  item.kind = *kind;
  item.name = std::string(text.substr(first + 2, last - first - 2));
  item.entity = std::string(text.substr(last + 2, colon - last - 2));
  item.line = static_cast<int>(*line);
  if (item.name.empty() || item.entity.empty()) return std::nullopt;
  // "05" and "5" both parse; only the canonical rendering round-trips.
  if (render_item(item) != text) return std::nullopt;
  return item;
}

}  // namespace esdp
