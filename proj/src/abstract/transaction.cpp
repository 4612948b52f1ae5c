// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/abstract/transaction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace esdp {

std::string transaction_id(const std::string& unit_path, const std::string& entity, LineSpan span) {
  return unit_path + "#" + entity + "@" + std::to_string(span.start) + "-" + std::to_string(span.end);
}

bool canonical_less(const ExtractedItem& a, const ExtractedItem& b) {
  if (a.item.line != b.item.line) return a.item.line < b.item.line;
  if (a.col != b.col) return a.col < b.col;
  if (a.item.kind != b.item.kind) return code_less(a.item.kind, b.item.kind);
  return a.item.name < b.item.name;
}

std::vector<Transaction> build_transactions(std::vector<ExtractedItem> items, const SourceUnit& unit) {
  using BlockKey = std::tuple<LineSpan, BlockKind, std::string>;
  std::map<BlockKey, std::vector<ExtractedItem>> blocks;
  for (auto& extracted : items) {
    BlockKey key{extracted.span, extracted.block, extracted.item.entity};
    blocks[key].push_back(std::move(extracted));
  }
  std::vector<Transaction> out;
  std::set<std::string> used_ids;
  for (auto& [key, members] : blocks) {
    std::sort(members.begin(), members.end(), canonical_less);
    members.erase(std::unique(members.begin(), members.end(),
                              [](const ExtractedItem& a, const ExtractedItem& b) {
                                return a.item == b.item && a.col == b.col;
                              }),
                  members.end());
    if (members.empty()) continue;
    Transaction tx;
    tx.span = std::get<0>(key);
    tx.block = std::get<1>(key);
    tx.entity = std::get<2>(key);
    tx.unit_path = unit.path;
    tx.id = transaction_id(unit.path, tx.entity, tx.span);
    if (!used_ids.insert(tx.id).second) {
      for (int n = 2;; ++n) {
        std::string candidate = tx.id + "~" + std::to_string(n);
        if (used_ids.insert(candidate).second) {
          tx.id = std::move(candidate);
          break;
        }
      }
    }
    tx.items.reserve(members.size());
    for (auto& m : members) tx.items.push_back(std::move(m.item));
    out.push_back(std::move(tx));
  }
  return out;
}

}  // namespace esdp
