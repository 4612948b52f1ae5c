// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/cli/commands.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "esdp/abstract/abstraction.hpp"
#include "esdp/common/digest.hpp"
#include "esdp/common/error.hpp"
#include "esdp/mine/sequence_db.hpp"

namespace esdp::cli {

std::size_t parallel_workers() {
  return std::max<std::size_t>(2, std::thread::hardware_concurrency());
}

BuildSummary build_central(const SourceConfig& config, Timestamp now, std::size_t workers) {
  Corpus corpus = build_manifest(config.sources, now, config.extensions, config.update_interval_days);
  if (corpus.manifest.units.empty()) throw EmptyCorpusError("no source units found in any declared source");

  const DefaultTypeTable defaults = DefaultTypeTable::java_lang();
  AbstractionResult abstraction = abstract_units(corpus.units, defaults, workers);

  BuildSummary summary;
  summary.units = corpus.manifest.units.size();
  summary.warnings = std::move(corpus.warnings);
  for (const auto& report : abstraction.units) {
    if (report.degraded) ++summary.degraded_units;
    for (const auto& w : report.warnings) summary.warnings.push_back(report.unit_path + ": " + w);
  }
  auto& repo = summary.repo;
  repo.manifest = std::move(corpus.manifest);
  repo.terms = std::move(corpus.terms);
  repo.transactions = std::move(abstraction.transactions);
  for (auto& tx : corpus.imported) repo.transactions.push_back(std::move(tx));
  canonicalize(repo);
  for (const auto& tx : repo.transactions) {
    (tx.block == BlockKind::Method ? summary.method_transactions : summary.class_transactions) += 1;
    summary.items += tx.items.size();
  }
  return summary;
}

MineSummary mine_central(const CentralRepository& repo, std::string_view central_bytes, const MiningConfig& config,
                         std::size_t workers) {
  config.validate();
  MineSummary summary;
  const bool any_items = std::any_of(repo.transactions.begin(), repo.transactions.end(),
                                     [](const Transaction& tx) { return !tx.items.empty(); });
  if (any_items) {
    const SequenceDB db = build_sequence_db(repo.transactions);
    MiningResult result = mine_patterns(db, config, workers);
    summary.patterns = std::move(result.patterns);
    summary.sequences = result.sequences;
  }
  summary.document = write_mined_xml(summary.patterns, config, sha256_hex(central_bytes), summary.sequences);
  return summary;
}

namespace {

std::string qualified_prefix(std::string_view name) {
  const auto paren = name.find('(');
  if (paren != std::string_view::npos) name = name.substr(0, paren);
  if (name.starts_with("static ")) name.remove_prefix(7);
  const auto first = name.find('.');
  if (first == std::string_view::npos) return {};
  const auto second = name.find('.', first + 1);
  if (second == std::string_view::npos) return {};
  return std::string(name.substr(0, second));
}

}  // namespace

CentralStats compute_central_stats(const CentralRepository& repo) {
  CentralStats stats;
  stats.files = repo.manifest.units.size();
  std::set<std::string> own;
  for (const auto& tx : repo.transactions) {
    for (const auto& item : tx.items) {
      if (item.kind == ItemKind::PK) own.insert(item.name);
    }
  }
  std::map<std::string, std::size_t> counts;
  for (const auto& tx : repo.transactions) {
    (tx.block == BlockKind::Method ? stats.method_transactions : stats.class_transactions) += 1;
    stats.items += tx.items.size();
    for (const auto& item : tx.items) {
      if (item.kind == ItemKind::PK) continue;
      std::string prefix = qualified_prefix(item.name);
      if (prefix.empty()) continue;
      const bool is_own = std::any_of(own.begin(), own.end(), [&](const std::string& pkg) {
        return item.name.starts_with(pkg + ".") || pkg.starts_with(prefix + ".") || pkg == prefix;
      });
      if (!is_own) ++counts[std::move(prefix)];
    }
  }
  for (const auto& [prefix, count] : counts) {
    if (count > stats.prominent_count) {
      stats.prominent_prefix = prefix;
      stats.prominent_count = count;
    }
  }
  return stats;
}

}  // namespace esdp::cli
