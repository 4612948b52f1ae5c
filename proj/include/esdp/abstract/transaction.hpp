// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <string>
#include <vector>

#include "esdp/abstract/extract.hpp"

namespace esdp {

/// The ordered items of one class block or one method block.
struct Transaction {
  std::string id;
  std::string entity;
  BlockKind block = BlockKind::Class;
  std::vector<Item> items;
  std::string unit_path;
  LineSpan span;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// "<unit path>#<entity>@<start>-<end>"
std::string transaction_id(const std::string& unit_path, const std::string& entity, LineSpan span);

/// Canonical item order: line, column, kind code, name.
bool canonical_less(const ExtractedItem& a, const ExtractedItem& b);

/// Groups extracted items into one transaction per block, sorts items
/// canonically, drops exact duplicates and empty blocks. Transactions come
/// back ordered by span, then block kind, then entity. Ids that would
/// collide get a "~N" suffix.
std::vector<Transaction> build_transactions(std::vector<ExtractedItem> items, const SourceUnit& unit);

}  // namespace esdp
