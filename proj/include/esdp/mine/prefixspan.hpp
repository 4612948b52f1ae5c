// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "esdp/mine/sequence_db.hpp"

namespace esdp {

struct MiningConfig {
  std::size_t min_support = 2;
  std::size_t max_k = 6;
  std::size_t max_exemplars = 3;

  /// Throws ConfigError unless every field is at least 1.
  void validate() const;
};

struct FrequentSequence {
  std::vector<ItemId> items;
  std::size_t support = 0;

  friend bool operator==(const FrequentSequence&, const FrequentSequence&) = default;
  friend auto operator<=>(const FrequentSequence&, const FrequentSequence&) = default;
};

/// Pseudo-projected database: each entry is a sequence and the offset where
/// its suffix starts. Entries stay in db order.
class ProjectedView {
 public:
  struct Entry {
    std::uint32_t sequence = 0;
    std::uint32_t start = 0;
  };

  /// Every sequence, whole.
  static ProjectedView full(const SequenceDB& db);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::span<const ItemId> suffix(std::size_t i) const;

  /// Suffixes strictly after the first occurrence of `item`; sequences
  /// without it are dropped.
  ProjectedView project(ItemId item) const;

 private:
  explicit ProjectedView(const SequenceDB& db) : db_(&db) {}

  const SequenceDB* db_;
  std::vector<Entry> entries_;
};

/// Every sequence of 1..max_k single items contained (gaps allowed) in at
/// least min_support db sequences, each sequence counted once. Results are
/// sorted by item ids. `workers` > 1 mines sibling first-item branches
/// concurrently with the same result.
std::vector<FrequentSequence> prefixspan(const SequenceDB& db, const MiningConfig& config, std::size_t workers = 1);

}  // namespace esdp
