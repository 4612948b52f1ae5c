// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "esdp/corpus/source_config.hpp"
#include "esdp/mine/pattern.hpp"
#include "esdp/store/central.hpp"
#include "esdp/store/mined.hpp"

namespace esdp::cli {

/// Worker count used by --parallel; at least 2 so the parallel paths run
/// even on a single core.
std::size_t parallel_workers();

struct BuildSummary {
  CentralRepository repo;
  std::size_t units = 0;
  std::size_t degraded_units = 0;
  std::size_t method_transactions = 0;
  std::size_t class_transactions = 0;
  std::size_t items = 0;
  std::vector<std::string> warnings;
};

/// Scan, abstract and assemble the central repository (canonical order).
/// Throws EmptyCorpusError when no source unit was found.
BuildSummary build_central(const SourceConfig& config, Timestamp now, std::size_t workers = 1);

struct MineSummary {
  std::vector<SequencePattern> patterns;
  std::size_t sequences = 0;
  std::string document;
};

/// Mines `repo` and serializes the result; `central_bytes` is the document
/// the repository was read from, recorded by digest.
MineSummary mine_central(const CentralRepository& repo, std::string_view central_bytes, const MiningConfig& config,
                         std::size_t workers = 1);

struct CentralStats {
  std::size_t files = 0;
  std::size_t method_transactions = 0;
  std::size_t class_transactions = 0;
  std::size_t items = 0;
  /// Most frequent two-component qualified prefix outside the corpus's own
  /// packages, with its item count; empty when none.
  std::string prominent_prefix;
  std::size_t prominent_count = 0;
};

CentralStats compute_central_stats(const CentralRepository& repo);

struct BenchQuery {
  std::string query;
  /// Rendered pattern whose position is reported; when absent the first
  /// entry matching by name (strength >= 2) is reported.
  std::optional<std::string> expected;
};

/// One query per line; an expected pattern may follow a tab. Blank lines and
/// lines starting with '#' are skipped. Throws ConfigError when none remain.
std::vector<BenchQuery> parse_bench_queries(std::string_view text);

struct BenchRow {
  std::string query;
  double median_ms = 0.0;
  std::optional<std::size_t> first_match_rank;
  std::size_t entries = 0;
  /// Pattern indices of the last run, for serial/parallel comparison.
  std::vector<std::size_t> result;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double median_ms = 0.0;
  double max_ms = 0.0;
};

BenchReport run_bench(const MinedRepository& repo, const std::vector<BenchQuery>& queries, std::size_t runs,
                      std::size_t top_k, bool parallel);

/// Header `query,median_ms,first_match_rank,entries`, LF endings.
std::string render_bench_csv(const BenchReport& report);

double median(std::vector<double> values);

}  // namespace esdp::cli
