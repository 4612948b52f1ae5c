// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "esdp/common/source_unit.hpp"
#include "esdp/mine/pattern.hpp"
#include "esdp/store/central.hpp"

namespace esdp::testing {

/// Directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, std::string_view text);
std::string read_file(const std::filesystem::path& path);

/// In-memory unit with digest and line index filled in.
SourceUnit make_unit(const std::string& path, std::string text);

/// Directory holding the committed fixture files.
std::filesystem::path fixture_dir();

// --- Mining oracle -------------------------------------------------------

using IntSeq = std::vector<int>;

/// Every distinct subsequence of length 1..max_k mapped to the number of
/// sequences containing it, keeping those with support >= min_support.
/// Enumerates position subsets directly; independent of the miner.
std::map<IntSeq, std::size_t> brute_force_frequent(const std::vector<IntSeq>& db, std::size_t min_support,
                                                   std::size_t max_k);

/// Transactions whose items are MI items named "s<symbol>", one per sequence,
/// ids "S1", "S2", ...
std::vector<Transaction> transactions_from(const std::vector<IntSeq>& db);

/// Symbol sequence of a pattern built from transactions_from.
IntSeq symbols_of(const std::vector<ItemKey>& items);

/// The comparator written out independently: score desc, support desc, k
/// desc, item names lexicographic, then kind codes.
bool oracle_ranks_before(const SequencePattern& a, const SequencePattern& b);

// --- Corpus generators ---------------------------------------------------

/// Writes `<dir>/esdp.conf` naming every source and returns its path.
std::filesystem::path write_config(const std::filesystem::path& dir,
                                   const std::vector<std::pair<std::string, std::string>>& id_and_root);

struct GeneratedCorpus {
  std::filesystem::path config;
  std::size_t files = 0;
  std::size_t methods = 0;
};

/// Desk-scale corpus: >= 50 files, >= 200 method blocks, using the APIs named
/// by the shipped benchmark query set plus a trending-terms source.
GeneratedCorpus write_desk_corpus(const std::filesystem::path& dir);

/// 20 method blocks; alphaStep/betaStep/gammaStep planted in order in 8 of
/// them; every other call is unique.
GeneratedCorpus write_planted_corpus(const std::filesystem::path& dir);

/// Random Java-like corpus; some files have unbalanced braces, unterminated
/// literals or comments, stray bytes and invalid UTF-8.
GeneratedCorpus write_random_corpus(const std::filesystem::path& dir, std::uint32_t seed);

// --- Random store models -------------------------------------------------

CentralRepository random_central(std::mt19937& rng);

/// Ranked patterns satisfying the stored-pattern invariants.
std::vector<SequencePattern> random_patterns(std::mt19937& rng);

}  // namespace esdp::testing
