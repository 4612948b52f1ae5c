// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "esdp/abstract/item.hpp"
#include "esdp/abstract/transaction.hpp"

namespace esdp {

using ItemId = std::uint32_t;

/// Item identity for mining: location and entity are deliberately excluded.
struct ItemKey {
  ItemKind kind = ItemKind::MI;
  std::string name;

  friend bool operator==(const ItemKey&, const ItemKey&) = default;
};

/// "KIND name", the form used in pattern renderings.
std::string render_key(const ItemKey& key);

/// Bijection between item keys and dense ids assigned in first-encounter order.
class ItemDictionary {
 public:
  ItemId intern(const ItemKey& key);
  std::optional<ItemId> find(const ItemKey& key) const;
  const ItemKey& key(ItemId id) const { return keys_.at(id); }
  std::size_t size() const noexcept { return keys_.size(); }

 private:
  static std::string lookup_key(const ItemKey& key);

  std::vector<ItemKey> keys_;
  std::unordered_map<std::string, ItemId> ids_;
};

struct Sequence {
  std::string transaction_id;
  std::vector<ItemId> items;
};

struct SequenceDB {
  ItemDictionary dictionary;
  std::vector<Sequence> sequences;

  std::size_t size() const noexcept { return sequences.size(); }
};

/// One sequence per non-empty transaction, in input order. Throws
/// EmptyCorpusError when no transaction has items.
SequenceDB build_sequence_db(const std::vector<Transaction>& transactions);

}  // namespace esdp
