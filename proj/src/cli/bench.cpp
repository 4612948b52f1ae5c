// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <thread>

#include "esdp/cli/commands.hpp"
#include "esdp/common/error.hpp"
#include "esdp/common/strings.hpp"
#include "esdp/recommend/matcher.hpp"

namespace esdp::cli {

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

std::vector<BenchQuery> parse_bench_queries(std::string_view text) {
  std::vector<BenchQuery> queries;
  for (const auto& raw_line : split(text, '\n')) {
    std::string_view line = raw_line;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).starts_with('#')) continue;
    BenchQuery q;
    const auto tab = line.find('\t');
    q.query = std::string(trim(line.substr(0, tab)));
    if (tab != std::string_view::npos) {
      const auto expected = trim(line.substr(tab + 1));
      if (!expected.empty()) q.expected = std::string(expected);
    }
    if (!q.query.empty()) queries.push_back(std::move(q));
  }
  if (queries.empty()) throw ConfigError("benchmark query list is empty");
  return queries;
}

namespace {

BenchRow bench_one(const MinedRepository& repo, const BenchQuery& query, std::size_t runs, std::size_t top_k) {
  BenchRow row;
  row.query = query.query;
  const QuerySketch sketch = parse_query(query.query);
  std::vector<double> times;
  Recommendation rec;
  for (std::size_t r = 0; r < runs; ++r) {
    rec = match_patterns(sketch, repo, top_k);
    times.push_back(rec.elapsed_ms);
  }
  row.median_ms = median(std::move(times));
  row.entries = rec.entries.size();
  for (std::size_t i = 0; i < rec.entries.size(); ++i) {
    const auto& entry = rec.entries[i];
    row.result.push_back(entry.pattern_index);
    if (row.first_match_rank) continue;
    const bool hit = query.expected ? render_pattern(repo.patterns()[entry.pattern_index]) == *query.expected
                                    : entry.match_strength >= 2;
    if (hit) row.first_match_rank = i + 1;
  }
  return row;
}

}  // namespace

BenchReport run_bench(const MinedRepository& repo, const std::vector<BenchQuery>& queries, std::size_t runs,
                      std::size_t top_k, bool parallel) {
  if (runs == 0) throw ConfigError("runs must be at least 1");
  for (const auto& q : queries) parse_query(q.query);
  BenchReport report;
  report.rows.resize(queries.size());
  if (parallel) {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const std::size_t workers = std::min(parallel_workers(), queries.size());
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < queries.size(); i = next++) {
          report.rows[i] = bench_one(repo, queries[i], runs, top_k);
        }
      });
    }
  } else {
    for (std::size_t i = 0; i < queries.size(); ++i) report.rows[i] = bench_one(repo, queries[i], runs, top_k);
  }
  std::vector<double> medians;
  for (const auto& row : report.rows) {
    medians.push_back(row.median_ms);
    report.max_ms = std::max(report.max_ms, row.median_ms);
  }
  report.median_ms = median(std::move(medians));
  return report;
}

std::string render_bench_csv(const BenchReport& report) {
  std::string out = "query,median_ms,first_match_rank,entries\n";
  for (const auto& row : report.rows) {
    std::string query = row.query;
    if (query.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (const char c : query) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      query = quoted + "\"";
    }
    out += fmt::format("{},{:.3f},{},{}\n", query, row.median_ms,
                       row.first_match_rank ? std::to_string(*row.first_match_rank) : std::string("none"),
                       row.entries);
  }
  return out;
}

}  // namespace esdp::cli
