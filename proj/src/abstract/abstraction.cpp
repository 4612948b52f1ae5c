// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/abstract/abstraction.hpp"

#include <atomic>
#include <thread>

#include "esdp/abstract/block_tree.hpp"
#include "esdp/abstract/extract.hpp"

namespace esdp {

namespace {

template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> threads;
  const std::size_t n = std::min(workers, count);
  threads.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

std::size_t count_bodies(const std::vector<TypeDecl>& types) {
  std::size_t n = 0;
  for_each_type(types, [&](const TypeDecl& t) {
    for (const auto& m : t.methods) n += m.has_body ? 1 : 0;
  });
  return n;
}

}  // namespace

AbstractionResult abstract_units(const std::vector<SourceUnit>& units, const DefaultTypeTable& defaults,
                                 std::size_t workers) {
  std::vector<BlockTree> trees(units.size());
  parallel_for(units.size(), workers, [&](std::size_t i) { trees[i] = parse_unit(units[i]); });

  DeclarationIndex index;
  for (const auto& tree : trees) index.add(tree, defaults);

  std::vector<std::vector<Transaction>> per_unit(units.size());
  parallel_for(units.size(), workers, [&](std::size_t i) {
    per_unit[i] = build_transactions(extract_items(trees[i], units[i], index, defaults), units[i]);
  });

  AbstractionResult result;
  for (std::size_t i = 0; i < units.size(); ++i) {
    UnitReport report;
    report.unit_path = units[i].path;
    report.degraded = trees[i].degraded;
    report.warnings = trees[i].warnings;
    report.method_bodies = count_bodies(trees[i].types);
    report.transactions = per_unit[i].size();
    result.method_bodies += report.method_bodies;
    for (auto& tx : per_unit[i]) {
      result.item_count += tx.items.size();
      result.transactions.push_back(std::move(tx));
    }
    result.units.push_back(std::move(report));
  }
  return result;
}

}  // namespace esdp
