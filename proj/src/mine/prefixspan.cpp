// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/mine/prefixspan.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "esdp/common/error.hpp"

namespace esdp {

void MiningConfig::validate() const {
  if (min_support < 1) throw ConfigError("min_support must be at least 1");
  if (max_k < 1) throw ConfigError("max_k must be at least 1");
  if (max_exemplars < 1) throw ConfigError("max_exemplars must be at least 1");
}

ProjectedView ProjectedView::full(const SequenceDB& db) {
  ProjectedView view(db);
  view.entries_.reserve(db.size());
  for (std::size_t i = 0; i < db.size(); ++i) view.entries_.push_back(Entry{static_cast<std::uint32_t>(i), 0});
  return view;
}

std::span<const ItemId> ProjectedView::suffix(std::size_t i) const {
  const Entry& e = entries_[i];
  const auto& items = db_->sequences[e.sequence].items;
  return std::span<const ItemId>(items).subspan(e.start);
}

ProjectedView ProjectedView::project(ItemId item) const {
  ProjectedView out(*db_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto s = suffix(i);
    const auto it = std::find(s.begin(), s.end(), item);
    if (it == s.end()) continue;
    const auto offset = entries_[i].start + static_cast<std::uint32_t>(it - s.begin()) + 1;
    out.entries_.push_back(Entry{entries_[i].sequence, offset});
  }
  return out;
}

namespace {

class Miner {
 public:
  Miner(const SequenceDB& db, const MiningConfig& config)
      : config_(config), counts_(db.dictionary.size(), 0), stamps_(db.dictionary.size(), 0) {}

  // Items occurring in at least min_support suffixes, ascending by id.
  std::vector<std::pair<ItemId, std::size_t>> frequent_items(const ProjectedView& view) {
    std::vector<ItemId> touched;
    for (std::size_t i = 0; i < view.size(); ++i) {
      ++epoch_;
      for (const ItemId item : view.suffix(i)) {
        if (stamps_[item] == epoch_) continue;
        stamps_[item] = epoch_;
        if (counts_[item]++ == 0) touched.push_back(item);
      }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<std::pair<ItemId, std::size_t>> out;
    for (const ItemId item : touched) {
      if (counts_[item] >= config_.min_support) out.emplace_back(item, counts_[item]);
      counts_[item] = 0;
    }
    return out;
  }

  void grow(const ProjectedView& view, std::vector<ItemId>& prefix, std::vector<FrequentSequence>& out) {
    for (const auto& [item, support] : frequent_items(view)) {
      extend(view, prefix, item, support, out);
    }
  }

  void extend(const ProjectedView& view, std::vector<ItemId>& prefix, ItemId item, std::size_t support,
              std::vector<FrequentSequence>& out) {
    prefix.push_back(item);
    out.push_back(FrequentSequence{prefix, support});
    if (prefix.size() < config_.max_k) grow(view.project(item), prefix, out);
    prefix.pop_back();
  }

 private:
  const MiningConfig& config_;
  std::vector<std::size_t> counts_;
  std::vector<std::uint64_t> stamps_;
  std::uint64_t epoch_ = 0;
};

}  // namespace

std::vector<FrequentSequence> prefixspan(const SequenceDB& db, const MiningConfig& config, std::size_t workers) {
  config.validate();
  const ProjectedView root = ProjectedView::full(db);
  std::vector<FrequentSequence> out;
  Miner root_miner(db, config);
  const auto first_items = root_miner.frequent_items(root);

  if (workers <= 1 || first_items.size() <= 1) {
    std::vector<ItemId> prefix;
    for (const auto& [item, support] : first_items) root_miner.extend(root, prefix, item, support, out);
  } else {
    std::vector<std::vector<FrequentSequence>> branches(first_items.size());
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> threads;
      const std::size_t n = std::min(workers, first_items.size());
      for (std::size_t t = 0; t < n; ++t) {
        threads.emplace_back([&] {
          Miner miner(db, config);
          std::vector<ItemId> prefix;
          for (std::size_t b = next++; b < first_items.size(); b = next++) {
            miner.extend(root, prefix, first_items[b].first, first_items[b].second, branches[b]);
          }
        });
      }
    }
    for (auto& branch : branches) {
      for (auto& seq : branch) out.push_back(std::move(seq));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FrequentSequence& a, const FrequentSequence& b) { return a.items < b.items; });
  return out;
}

}  // namespace esdp
