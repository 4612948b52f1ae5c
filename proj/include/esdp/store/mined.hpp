// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "esdp/mine/pattern.hpp"

namespace esdp {

/// Header of a mined document: where the patterns came from and how.
struct MinedProvenance {
  std::string central_digest;
  std::size_t min_support = 0;
  std::size_t max_k = 0;
  std::size_t sequences = 0;

  friend bool operator==(const MinedProvenance&, const MinedProvenance&) = default;
};

/// Serializes patterns in rank order. Throws InternalConsistencyError when
/// ranks are not exactly 1..N or a stored score is not k × support.
std::string write_mined_xml(const std::vector<SequencePattern>& patterns, const MiningConfig& config,
                            const std::string& central_digest, std::size_t sequences);

/// Loaded mined repository. Immutable after construction; safe for concurrent
/// readers. Pattern indices are positions in patterns(), which is rank order.
class MinedRepository {
 public:
  /// Validates invariants and builds indexes. Throws CorruptRepositoryError
  /// naming the first offending rank.
  MinedRepository(std::vector<SequencePattern> patterns, MinedProvenance provenance);

  const std::vector<SequencePattern>& patterns() const noexcept { return patterns_; }
  const MinedProvenance& provenance() const noexcept { return provenance_; }

  /// Indices of patterns containing an item named `name`, ascending.
  std::span<const std::size_t> with_item(std::string_view name) const;
  /// Indices of patterns whose first item is named `name`, ascending.
  std::span<const std::size_t> starting_with(std::string_view name) const;
  /// Every distinct item name with its posting list.
  const std::map<std::string, std::vector<std::size_t>, std::less<>>& item_index() const noexcept {
    return by_item_;
  }

 private:
  std::vector<SequencePattern> patterns_;
  MinedProvenance provenance_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_item_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_first_;
};

/// Throws XmlParseError, SchemaVersionError, SchemaError or
/// CorruptRepositoryError.
MinedRepository read_mined_xml(std::string_view bytes);

}  // namespace esdp
