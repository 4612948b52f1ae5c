// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "esdp/recommend/query.hpp"
#include "esdp/store/mined.hpp"

namespace esdp {

struct RecommendationEntry {
  /// Position in MinedRepository::patterns().
  std::size_t pattern_index = 0;
  std::uint64_t score = 0;
  int match_strength = 0;
  /// The best-matching item is the pattern's first item.
  bool first_item = false;
  /// Transaction id of the first exemplar, empty when none is stored.
  std::string skeleton_ref;

  friend bool operator==(const RecommendationEntry&, const RecommendationEntry&) = default;
};

struct Recommendation {
  std::vector<RecommendationEntry> entries;
  QuerySketch query;
  double elapsed_ms = 0.0;
};

/// Entries ordered by (strength desc, first-item tier-3 match first, score
/// desc, rank asc), truncated to top_k. Throws ConfigError when top_k is 0.
Recommendation match_patterns(const QuerySketch& sketch, const MinedRepository& repo, std::size_t top_k);

/// Terms with a case-insensitive prefix match, list order, at most `limit`.
std::vector<std::string> suggest_terms(std::string_view prefix, const std::vector<std::string>& terms,
                                       std::size_t limit);

}  // namespace esdp
