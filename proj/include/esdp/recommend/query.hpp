// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "esdp/abstract/item.hpp"

namespace esdp {

struct QuerySketch {
  std::string raw;
  std::string name_fragment;
  std::optional<ItemKind> kind_hint;
  /// The query names an item completely: a qualified name, a full method
  /// signature, or a rendered item "KIND, name, entity:NN".
  bool exact = false;
  /// The complete item name when `exact`, otherwise empty.
  std::string full_name;

  friend bool operator==(const QuerySketch&, const QuerySketch&) = default;
};

/// Throws EmptyQueryError for blank input.
QuerySketch parse_query(std::string_view raw);

/// Text after the last '.' of the part before the first '('.
std::string_view simple_name(std::string_view item_name);

/// Match strength of one item: 3 exact (respecting the kind hint), 2 simple
/// name, 1 case-insensitive substring, 0 none.
int match_tier(const QuerySketch& sketch, ItemKind kind, std::string_view item_name);

}  // namespace esdp
