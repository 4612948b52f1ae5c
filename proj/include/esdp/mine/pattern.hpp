// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "esdp/mine/prefixspan.hpp"
#include "esdp/mine/sequence_db.hpp"

namespace esdp {

/// A mined, scored, ranked usage pattern.
struct SequencePattern {
  std::vector<ItemKey> items;
  std::size_t k = 0;
  std::size_t support = 0;
  double confidence = 0.0;
  std::uint64_t score = 0;
  std::size_t rank = 0;
  /// Supporting transaction ids, db order.
  std::vector<std::string> exemplars;

  friend bool operator==(const SequencePattern&, const SequencePattern&) = default;
};

/// k x support.
std::uint64_t score_pattern(std::size_t k, std::size_t support);
inline std::uint64_t score_pattern(const SequencePattern& p) { return score_pattern(p.k, p.support); }

/// support / support(prefix of length k-1) for k >= 2, support / db_size for
/// k == 1. `mined` must be sorted by items (prefixspan order) and contain the
/// prefix; a missing prefix throws InternalConsistencyError.
double compute_confidence(const FrequentSequence& pattern, const std::vector<FrequentSequence>& mined,
                          std::size_t db_size);

/// Score descending, then support descending, then k descending, then item
/// names ascending (lexicographic over the sequence), then kind codes.
bool ranks_before(const SequencePattern& a, const SequencePattern& b);

/// Sorts with ranks_before and assigns 1-based ranks.
void rank_patterns(std::vector<SequencePattern>& patterns);

/// True when `pattern` occurs in `sequence` with gaps allowed.
bool contains_subsequence(std::span<const ItemId> sequence, std::span<const ItemId> pattern);

/// Keeps the first `max_exemplars` supporting transaction ids, db order.
void attach_snippets(std::vector<SequencePattern>& patterns, const SequenceDB& db, std::size_t max_exemplars);

/// "KIND name → KIND name → …"
std::string render_pattern(const SequencePattern& pattern);

struct MiningResult {
  std::vector<SequencePattern> patterns;
  std::size_t sequences = 0;
};

/// prefixspan, scoring, confidence, ranking and exemplars in one call.
MiningResult mine_patterns(const SequenceDB& db, const MiningConfig& config, std::size_t workers = 1);

}  // namespace esdp
