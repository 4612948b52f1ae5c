// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/cli/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>

#include "esdp/cli/commands.hpp"
#include "esdp/common/error.hpp"
#include "esdp/common/strings.hpp"
#include "esdp/recommend/render.hpp"

namespace esdp::cli {

namespace {

/// A command-line mistake: reported with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string config;
  std::string central = "esdp-central.xml";
  std::string mined = "esdp-mined.xml";
  std::size_t min_support = 2;
  std::size_t max_k = 6;
  std::size_t top_k = 10;
  std::size_t exemplars = 3;
  std::size_t runs = 5;
  bool skeleton = false;
  bool xml = false;
  bool parallel = false;
  std::string now;
  std::string csv;
  std::string terms;
  std::vector<std::string> args;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Timestamp resolve_now(const Options& o) {
  if (o.now.empty()) return now_utc();
  try {
    return parse_iso8601(o.now);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::size_t workers(const Options& o) { return o.parallel ? parallel_workers() : 1; }

MiningConfig mining_config(const Options& o) {
  MiningConfig config{o.min_support, o.max_k, o.exemplars};
  try {
    config.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return config;
}

void warn_if_stale(const Manifest& manifest, Timestamp now, const Io& io) {
  try {
    const auto report = check_staleness(manifest, now);
    if (report.stale) io.err << fmt::format("repository stale: {} days\n", report.age_days);
  } catch (const ClockSkewError& e) {
    io.err << "warning: " << e.what() << "\n";
  }
}

std::string read_existing(const std::string& path, const char* what) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) throw IoError(fmt::format("{} repository {} does not exist", what, path));
  return read_file_bytes(path);
}

int cmd_build(const Options& o, const Io& io) {
  if (o.config.empty()) throw UsageError("build requires --config PATH");
  SourceConfig config;
  try {
    config = load_source_config(o.config);
  } catch (const SourceUnavailableError& e) {
    throw UsageError(e.what());
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  const Timestamp now = resolve_now(o);

  std::error_code ec;
  if (std::filesystem::exists(o.central, ec)) {
    try {
      const auto previous = read_central_xml(read_file_bytes(o.central));
      warn_if_stale(previous.manifest, now, io);
    } catch (const Error& e) {
      io.err << "warning: previous central repository unreadable: " << e.what() << "\n";
    }
  }

  const auto started = std::chrono::steady_clock::now();
  BuildSummary summary = build_central(config, now, workers(o));
  for (const auto& w : summary.warnings) io.err << "warning: " << w << "\n";
  write_file_atomic(o.central, write_central_xml(summary.repo));
  io.out << fmt::format("units: {}\n", summary.units);
  io.out << fmt::format("degraded units: {}\n", summary.degraded_units);
  io.out << fmt::format("transactions: {} (method {}, class {})\n",
                        summary.method_transactions + summary.class_transactions, summary.method_transactions,
                        summary.class_transactions);
  io.out << fmt::format("items: {}\n", summary.items);
  io.out << fmt::format("repository fresh: built {}, update interval {} days\n",
                        format_iso8601(summary.repo.manifest.built_at), summary.repo.manifest.update_interval_days);
  io.out << fmt::format("wrote {} in {:.1f} ms\n", o.central, ms_since(started));
  return kExitOk;
}

int cmd_mine(const Options& o, const Io& io) {
  const MiningConfig config = mining_config(o);
  const std::string bytes = read_existing(o.central, "central");
  const CentralRepository repo = read_central_xml(bytes);
  warn_if_stale(repo.manifest, resolve_now(o), io);
  const auto started = std::chrono::steady_clock::now();
  const MineSummary summary = mine_central(repo, bytes, config, workers(o));
  write_file_atomic(o.mined, summary.document);
  io.out << fmt::format("sequences: {}\n", summary.sequences);
  io.out << fmt::format("patterns: {}\n", summary.patterns.size());
  for (std::size_t i = 0; i < summary.patterns.size() && i < 5; ++i) {
    const auto& p = summary.patterns[i];
    io.out << fmt::format("{}\t{}\t{}\t{:.6f}\t{}\n", p.rank, p.score, p.support, p.confidence, render_pattern(p));
  }
  io.out << fmt::format("wrote {} in {:.1f} ms\n", o.mined, ms_since(started));
  return kExitOk;
}

MinedRepository load_mined(const Options& o, const Io& io) {
  const auto started = std::chrono::steady_clock::now();
  MinedRepository repo = read_mined_xml(read_existing(o.mined, "mined"));
  io.err << fmt::format("loaded {} patterns in {:.1f} ms\n", repo.patterns().size(), ms_since(started));
  return repo;
}

std::optional<CentralRepository> load_central_if_present(const Options& o) {
  std::error_code ec;
  if (!std::filesystem::exists(o.central, ec)) return std::nullopt;
  return read_central_xml(read_file_bytes(o.central));
}

void print_recommendation(const Recommendation& rec, const MinedRepository& repo, const Options& o,
                          const CentralIndex* central, const Io& io) {
  std::optional<CodeSkeleton> skeleton;
  if (o.skeleton && !rec.entries.empty()) {
    const auto& top = repo.patterns()[rec.entries.front().pattern_index];
    if (!top.exemplars.empty()) {
      static const CentralRepository kEmpty;
      static const CentralIndex kEmptyIndex(kEmpty);
      skeleton = assemble_skeleton(top, central ? *central : kEmptyIndex, 0);
    }
  }
  if (o.xml) {
    io.out << render_xml(rec, repo, skeleton);
    return;
  }
  if (rec.entries.empty()) {
    io.out << "0 results\n";
  } else {
    io.out << render_text(rec, repo);
  }
  if (skeleton) io.out << render_skeleton(*skeleton);
  io.out << fmt::format("elapsed: {:.3f} ms\n", rec.elapsed_ms);
}

int cmd_query(const Options& o, const Io& io) {
  if (o.top_k == 0) throw UsageError("--top-k must be at least 1");
  QuerySketch sketch;
  try {
    sketch = parse_query(join(o.args, " "));
  } catch (const EmptyQueryError& e) {
    throw UsageError(e.what());
  }
  const MinedRepository repo = load_mined(o, io);
  std::optional<CentralRepository> central;
  std::optional<CentralIndex> index;
  if (o.skeleton) {
    central = load_central_if_present(o);
    if (central) index.emplace(*central);
  }
  const Recommendation rec = match_patterns(sketch, repo, o.top_k);
  print_recommendation(rec, repo, o, index ? &*index : nullptr, io);
  return kExitOk;
}

int cmd_repl(const Options& o, const Io& io) {
  if (o.top_k == 0) throw UsageError("--top-k must be at least 1");
  const MinedRepository repo = load_mined(o, io);
  std::optional<CentralRepository> central;
  try {
    central = load_central_if_present(o);
  } catch (const Error& e) {
    io.err << "warning: central repository unreadable: " << e.what() << "\n";
  }
  std::optional<CentralIndex> index;
  if (central) index.emplace(*central);

  std::vector<std::string> terms;
  if (!o.terms.empty()) {
    terms = load_term_list(o.terms, "cli").terms;
  } else if (central) {
    for (const auto& list : central->terms) terms.insert(terms.end(), list.terms.begin(), list.terms.end());
  }

  io.out << fmt::format("ready: {} patterns; ?prefix suggests terms, :quit exits\n", repo.patterns().size());
  std::string line;
  while (std::getline(io.in, line)) {
    const std::string_view text = trim(line);
    if (text == ":quit") return kExitOk;
    if (text.starts_with('?')) {
      const auto suggestions = suggest_terms(trim(text.substr(1)), terms, 10);
      if (suggestions.empty()) io.out << "no suggestions\n";
      for (const auto& s : suggestions) io.out << s << "\n";
      continue;
    }
    try {
      const Recommendation rec = match_patterns(parse_query(text), repo, o.top_k);
      print_recommendation(rec, repo, o, index ? &*index : nullptr, io);
    } catch (const Error& e) {
      io.out << "error: " << e.what() << "\n";
    }
  }
  return kExitOk;
}

int cmd_bench(const Options& o, const Io& io) {
  if (o.top_k == 0 || o.runs == 0) throw UsageError("--top-k and --runs must be at least 1");
  const std::string path = o.args.empty() ? std::string(ESDP_DATA_DIR) + "/bench_queries.txt" : o.args.front();
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) throw IoError("cannot read queries file " + path);
  const auto queries = parse_bench_queries(read_file_bytes(path));
  const MinedRepository repo = load_mined(o, io);
  const BenchReport report = run_bench(repo, queries, o.runs, o.top_k, o.parallel);
  const std::string csv = render_bench_csv(report);
  if (!o.csv.empty()) write_file_atomic(o.csv, csv);
  io.out << csv;
  io.out << fmt::format("summary: median {:.3f} ms, max {:.3f} ms over {} queries x {} runs\n", report.median_ms,
                        report.max_ms, report.rows.size(), o.runs);
  return kExitOk;
}

int cmd_stats(const Options& o, const Io& io) {
  std::error_code ec;
  const bool have_central = std::filesystem::exists(o.central, ec);
  const bool have_mined = std::filesystem::exists(o.mined, ec);
  if (!have_central && !have_mined) {
    throw IoError(fmt::format("neither {} nor {} exists", o.central, o.mined));
  }
  if (have_central) {
    const CentralRepository repo = read_central_xml(read_file_bytes(o.central));
    warn_if_stale(repo.manifest, resolve_now(o), io);
    const CentralStats stats = compute_central_stats(repo);
    io.out << fmt::format("files: {}\n", stats.files);
    io.out << fmt::format("method transactions: {}\n", stats.method_transactions);
    io.out << fmt::format("class transactions: {}\n", stats.class_transactions);
    io.out << fmt::format("items: {}\n", stats.items);
    if (stats.prominent_prefix.empty()) {
      io.out << "prominent API: none\n";
    } else {
      io.out << fmt::format("prominent API: {} ({} items)\n", stats.prominent_prefix, stats.prominent_count);
    }
  }
  if (have_mined) {
    const MinedRepository mined = read_mined_xml(read_file_bytes(o.mined));
    io.out << fmt::format("patterns: {}\n", mined.patterns().size());
    io.out << fmt::format("sequences: {}\n", mined.provenance().sequences);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Mine API usage patterns from source code and recommend them for queries.", "esdp"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--config", o.config, "Source configuration file");
  app.add_option("--central", o.central, "Central repository XML")->capture_default_str();
  app.add_option("--mined", o.mined, "Mined repository XML")->capture_default_str();
  app.add_option("--min-support", o.min_support, "Minimum support (>= 1)")->capture_default_str();
  app.add_option("--max-k", o.max_k, "Maximum pattern length (>= 1)")->capture_default_str();
  app.add_option("--top-k", o.top_k, "Maximum recommendations (>= 1)")->capture_default_str();
  app.add_option("--exemplars", o.exemplars, "Exemplars stored per pattern (>= 1)")->capture_default_str();
  app.add_option("--runs", o.runs, "Benchmark repetitions per query")->capture_default_str();
  app.add_option("--csv", o.csv, "Also write the benchmark CSV here");
  app.add_option("--terms", o.terms, "Term list for REPL suggestions");
  app.add_flag("--skeleton", o.skeleton, "Show the top entry's code skeleton");
  app.add_flag("--xml", o.xml, "Render recommendations as XML");
  app.add_flag("--parallel", o.parallel, "Use worker threads");
  app.add_option("--now", o.now, "Override the current time (ISO-8601 UTC)")->group("");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"build", "Scan sources and write the central repository"},
      {"mine", "Mine the central repository into the mined repository"},
      {"query", "Recommend patterns for QUERY"},
      {"repl", "Interactive query loop"},
      {"bench", "Time queries from a file (default: the shipped query set)"},
      {"stats", "Summarize the repositories"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (std::string_view(name) == "query" || std::string_view(name) == "bench") {
      sub->add_option("args", o.args, "Query words or queries file");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Io io{in, out, err};
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "build") return cmd_build(o, io);
    if (command == "mine") return cmd_mine(o, io);
    if (command == "query") return cmd_query(o, io);
    if (command == "repl") return cmd_repl(o, io);
    if (command == "bench") return cmd_bench(o, io);
    return cmd_stats(o, io);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace esdp::cli
