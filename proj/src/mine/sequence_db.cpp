// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/mine/sequence_db.hpp"

#include "esdp/common/error.hpp"

namespace esdp {

std::string render_key(const ItemKey& key) { return std::string(code(key.kind)) + " " + key.name; }

std::string ItemDictionary::lookup_key(const ItemKey& key) {
  std::string out(code(key.kind));
  out.push_back('\x1f');
  out.append(key.name);
  return out;
}

ItemId ItemDictionary::intern(const ItemKey& key) {
  auto [it, inserted] = ids_.emplace(lookup_key(key), static_cast<ItemId>(keys_.size()));
  if (inserted) keys_.push_back(key);
  return it->second;
}

std::optional<ItemId> ItemDictionary::find(const ItemKey& key) const {
  const auto it = ids_.find(lookup_key(key));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

SequenceDB build_sequence_db(const std::vector<Transaction>& transactions) {
  SequenceDB db;
  for (const auto& tx : transactions) {
    if (tx.items.empty()) continue;
    Sequence seq;
    seq.transaction_id = tx.id;
    seq.items.reserve(tx.items.size());
    for (const auto& item : tx.items) seq.items.push_back(db.dictionary.intern(ItemKey{item.kind, item.name}));
    db.sequences.push_back(std::move(seq));
  }
  if (db.sequences.empty()) throw EmptyCorpusError("no transactions to mine");
  return db;
}

}  // namespace esdp
