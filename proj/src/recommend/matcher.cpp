// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/recommend/matcher.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "esdp/common/error.hpp"
#include "esdp/common/strings.hpp"

namespace esdp {

Recommendation match_patterns(const QuerySketch& sketch, const MinedRepository& repo, std::size_t top_k) {
  if (top_k == 0) throw ConfigError("top_k must be at least 1");
  const auto started = std::chrono::steady_clock::now();
  const auto& patterns = repo.patterns();

  std::unordered_map<std::size_t, RecommendationEntry> best;
  for (const auto& [name, postings] : repo.item_index()) {
    if (!contains_icase(name, sketch.name_fragment) && !(sketch.exact && name == sketch.full_name)) continue;
    for (const std::size_t index : postings) {
      const auto& pattern = patterns[index];
      for (std::size_t pos = 0; pos < pattern.items.size(); ++pos) {
        const auto& item = pattern.items[pos];
        if (item.name != name) continue;
        const int tier = match_tier(sketch, item.kind, item.name);
        if (tier == 0) continue;
        const bool first = tier == 3 && pos == 0;
        auto [it, inserted] = best.try_emplace(index);
        auto& entry = it->second;
        if (inserted || tier > entry.match_strength || (tier == entry.match_strength && first && !entry.first_item)) {
          entry.pattern_index = index;
          entry.score = pattern.score;
          entry.match_strength = tier;
          entry.first_item = first;
          entry.skeleton_ref = pattern.exemplars.empty() ? std::string() : pattern.exemplars.front();
        }
      }
    }
  }

  Recommendation rec;
  rec.query = sketch;
  rec.entries.reserve(best.size());
  for (auto& [index, entry] : best) rec.entries.push_back(std::move(entry));
  const auto order = [&](const RecommendationEntry& a, const RecommendationEntry& b) {
    if (a.match_strength != b.match_strength) return a.match_strength > b.match_strength;
    if (a.first_item != b.first_item) return a.first_item;
    if (a.score != b.score) return a.score > b.score;
    return patterns[a.pattern_index].rank < patterns[b.pattern_index].rank;
  };
  const std::size_t keep = std::min(top_k, rec.entries.size());
  std::partial_sort(rec.entries.begin(), rec.entries.begin() + static_cast<std::ptrdiff_t>(keep), rec.entries.end(),
                    order);
  rec.entries.resize(keep);
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return rec;
}

std::vector<std::string> suggest_terms(std::string_view prefix, const std::vector<std::string>& terms,
                                       std::size_t limit) {
  std::vector<std::string> out;
  for (const auto& term : terms) {
    if (out.size() >= limit) break;
    if (starts_with_icase(term, prefix)) out.push_back(term);
  }
  return out;
}

}  // namespace esdp
