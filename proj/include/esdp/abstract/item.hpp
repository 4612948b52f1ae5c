// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace esdp {

/// The 17 item kinds an abstracted code fact can have.
enum class ItemKind {
  PK,  // package declaration
  IM,  // import
  CD,  // class declaration
  ID,  // interface declaration
  ED,  // enum declaration
  XT,  // extends clause
  IP,  // implements clause
  FD,  // field declaration
  MD,  // method declaration
  CT,  // constructor declaration
  PM,  // parameter declaration
  VD,  // local variable declaration
  MI,  // method invocation
  CI,  // class instantiation
  FA,  // field access
  CS,  // cast expression
  EH,  // exception handling (try/catch/throw)
};

inline constexpr std::size_t kItemKindCount = 17;

struct ItemKindInfo {
  ItemKind kind;
  std::string_view code;
  std::string_view description;
};

const std::array<ItemKindInfo, kItemKindCount>& item_kind_catalog();

std::string_view code(ItemKind kind);
std::string_view description(ItemKind kind);
std::optional<ItemKind> parse_item_kind(std::string_view code);

/// True for kinds that belong to a class-block transaction.
bool is_class_level(ItemKind kind);

/// Orders kinds by their two-letter code, which is the canonical tie-break.
inline bool code_less(ItemKind a, ItemKind b) { return code(a) < code(b); }

/// One abstracted code fact: kind, normalized name, enclosing entity, line.
struct Item {
  ItemKind kind = ItemKind::PK;
  std::string name;
  std::string entity;
  int line = 1;

  friend bool operator==(const Item&, const Item&) = default;
};

/// "KIND, name, entity:line" with the line zero-padded to two digits,
/// e.g. "FD, dom.ASTParser, com.Test:05".
std::string render_item(const Item& item);

/// Inverse of render_item. Names and entities must not contain ", " and
/// entities must not contain ':'. Returns nullopt on malformed input.
std::optional<Item> parse_rendered_item(std::string_view text);

}  // namespace esdp
