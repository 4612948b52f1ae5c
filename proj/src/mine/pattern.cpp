// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/mine/pattern.hpp"

#include <algorithm>

#include "esdp/common/error.hpp"

namespace esdp {

std::uint64_t score_pattern(std::size_t k, std::size_t support) {
  return static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(support);
}

double compute_confidence(const FrequentSequence& pattern, const std::vector<FrequentSequence>& mined,
                          std::size_t db_size) {
  if (pattern.items.size() <= 1) {
    if (db_size == 0) throw InternalConsistencyError("confidence over an empty database");
    return static_cast<double>(pattern.support) / static_cast<double>(db_size);
  }
  const std::vector<ItemId> prefix(pattern.items.begin(), pattern.items.end() - 1);
  const auto it = std::lower_bound(mined.begin(), mined.end(), prefix,
                                   [](const FrequentSequence& f, const std::vector<ItemId>& key) { return f.items < key; });
  if (it == mined.end() || it->items != prefix) {
    throw InternalConsistencyError("prefix of a mined pattern is missing from the mined set");
  }
  return static_cast<double>(pattern.support) / static_cast<double>(it->support);
}

bool ranks_before(const SequencePattern& a, const SequencePattern& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.support != b.support) return a.support > b.support;
  if (a.k != b.k) return a.k > b.k;
  const auto by_name = [](const ItemKey& x, const ItemKey& y) { return x.name < y.name; };
  if (std::lexicographical_compare(a.items.begin(), a.items.end(), b.items.begin(), b.items.end(), by_name)) {
    return true;
  }
  if (std::lexicographical_compare(b.items.begin(), b.items.end(), a.items.begin(), a.items.end(), by_name)) {
    return false;
  }
  return std::lexicographical_compare(a.items.begin(), a.items.end(), b.items.begin(), b.items.end(),
                                      [](const ItemKey& x, const ItemKey& y) { return code_less(x.kind, y.kind); });
}

void rank_patterns(std::vector<SequencePattern>& patterns) {
  std::sort(patterns.begin(), patterns.end(), ranks_before);
  for (std::size_t i = 0; i < patterns.size(); ++i) patterns[i].rank = i + 1;
}

bool contains_subsequence(std::span<const ItemId> sequence, std::span<const ItemId> pattern) {
  std::size_t matched = 0;
  for (const ItemId item : sequence) {
    if (matched == pattern.size()) break;
    if (item == pattern[matched]) ++matched;
  }
  return matched == pattern.size();
}

void attach_snippets(std::vector<SequencePattern>& patterns, const SequenceDB& db, std::size_t max_exemplars) {
  for (auto& pattern : patterns) {
    pattern.exemplars.clear();
    std::vector<ItemId> ids;
    bool known = true;
    for (const auto& key : pattern.items) {
      const auto id = db.dictionary.find(key);
      if (!id) {
        known = false;
        break;
      }
      ids.push_back(*id);
    }
    if (!known) continue;
    for (const auto& seq : db.sequences) {
      if (pattern.exemplars.size() >= max_exemplars) break;
      if (contains_subsequence(seq.items, ids)) pattern.exemplars.push_back(seq.transaction_id);
    }
  }
}

std::string render_pattern(const SequencePattern& pattern) {
  std::string out;
  for (std::size_t i = 0; i < pattern.items.size(); ++i) {
    if (i > 0) out.append(" → ");
    out.append(render_key(pattern.items[i]));
  }
  return out;
}

MiningResult mine_patterns(const SequenceDB& db, const MiningConfig& config, std::size_t workers) {
  const auto mined = prefixspan(db, config, workers);
  MiningResult result;
  result.sequences = db.size();
  result.patterns.reserve(mined.size());
  for (const auto& f : mined) {
    SequencePattern p;
    for (const ItemId id : f.items) p.items.push_back(db.dictionary.key(id));
    p.k = f.items.size();
    p.support = f.support;
    p.score = score_pattern(p.k, p.support);
    p.confidence = compute_confidence(f, mined, db.size());
    result.patterns.push_back(std::move(p));
  }
  rank_patterns(result.patterns);
  attach_snippets(result.patterns, db, config.max_exemplars);
  return result;
}

}  // namespace esdp
