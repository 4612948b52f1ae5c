// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "esdp/common/error.hpp"
#include "esdp/mine/pattern.hpp"
#include "esdp/mine/prefixspan.hpp"
#include "esdp/mine/sequence_db.hpp"
#include "test_support.hpp"

using namespace esdp;
using esdp::testing::IntSeq;
using esdp::testing::symbols_of;
using esdp::testing::transactions_from;

namespace {

// a = 1, b = 2, c = 3
const std::vector<IntSeq> kFixture = {{1, 2, 3}, {1, 3}, {2, 3}};

std::map<IntSeq, std::size_t> mined_set(const std::vector<IntSeq>& seqs, const MiningConfig& config,
                                        std::size_t workers = 1) {
  const SequenceDB db = build_sequence_db(transactions_from(seqs));
  std::map<IntSeq, std::size_t> out;
  for (const auto& f : prefixspan(db, config, workers)) {
    std::vector<ItemKey> keys;
    for (const ItemId id : f.items) keys.push_back(db.dictionary.key(id));
    out.emplace(symbols_of(keys), f.support);
  }
  return out;
}

std::vector<IntSeq> random_db(std::mt19937& rng) {
  std::uniform_int_distribution<int> nseq(1, 10);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> alpha(1, 6);
  const int alphabet = alpha(rng);
  std::uniform_int_distribution<int> sym(1, alphabet);
  std::vector<IntSeq> db(static_cast<std::size_t>(nseq(rng)));
  for (auto& s : db) {
    const int n = len(rng);
    for (int i = 0; i < n; ++i) s.push_back(sym(rng));
  }
  return db;
}

}  // namespace

TEST(SequenceDb, SingleTransaction) {
  const SequenceDB db = build_sequence_db(transactions_from({{1}}));
  EXPECT_EQ(db.size(), 1u);
  EXPECT_EQ(db.dictionary.size(), 1u);
}

TEST(SequenceDb, InterningSharesIds) {
  auto txs = transactions_from({{1, 2}, {2, 1}});
  const SequenceDB db = build_sequence_db(txs);
  EXPECT_EQ(db.dictionary.size(), 2u);
  EXPECT_EQ(db.sequences[0].items[0], db.sequences[1].items[1]);
  EXPECT_EQ(db.dictionary.key(0), (ItemKey{ItemKind::MI, "s1"}));
  EXPECT_EQ(db.dictionary.find(ItemKey{ItemKind::MI, "s2"}), ItemId{1});
  EXPECT_FALSE(db.dictionary.find(ItemKey{ItemKind::FD, "s2"}));
}

TEST(SequenceDb, FixtureSizes) {
  const SequenceDB db = build_sequence_db(transactions_from(kFixture));
  EXPECT_EQ(db.size(), 3u);
  EXPECT_EQ(db.dictionary.size(), 3u);
  EXPECT_EQ(db.sequences[1].transaction_id, "S2");
}

TEST(SequenceDb, EmptyInputIsEmptyCorpus) {
  EXPECT_THROW(build_sequence_db({}), EmptyCorpusError);
}

TEST(PrefixSpan, SingleItem) {
  EXPECT_EQ(mined_set({{1}}, MiningConfig{1, 6, 3}), (std::map<IntSeq, std::size_t>{{{1}, 1}}));
}

TEST(PrefixSpan, FixtureMatchesOracle) {
  const std::map<IntSeq, std::size_t> expected = {{{1}, 2}, {{2}, 2}, {{3}, 3}, {{1, 3}, 2}, {{2, 3}, 2}};
  EXPECT_EQ(esdp::testing::brute_force_frequent(kFixture, 2, 3), expected);
  EXPECT_EQ(mined_set(kFixture, MiningConfig{2, 6, 3}), expected);
}

TEST(PrefixSpan, SupportAboveDbSizeIsEmpty) {
  EXPECT_TRUE(mined_set(kFixture, MiningConfig{4, 6, 3}).empty());
}

TEST(PrefixSpan, RepeatedItemsCountOncePerSequence) {
  const auto mined = mined_set({{1, 1, 1}, {1}}, MiningConfig{1, 6, 3});
  EXPECT_EQ(mined.at({1}), 2u);
  EXPECT_EQ(mined.at({1, 1}), 1u);
  EXPECT_EQ(mined.at({1, 1, 1}), 1u);
}

TEST(PrefixSpan, MaxKCapsLength) {
  const auto mined = mined_set({{1, 2, 3, 4}, {1, 2, 3, 4}}, MiningConfig{2, 2, 3});
  for (const auto& [p, s] : mined) EXPECT_LE(p.size(), 2u);
  EXPECT_TRUE(mined.contains({1, 4}));
}

TEST(PrefixSpan, RandomDbsMatchOracleSerialAndParallel) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto db = random_db(rng);
    for (std::size_t min_support : {1u, 2u, 3u}) {
      const auto expected = esdp::testing::brute_force_frequent(db, min_support, 8);
      EXPECT_EQ(mined_set(db, MiningConfig{min_support, 8, 3}), expected);
      EXPECT_EQ(mined_set(db, MiningConfig{min_support, 8, 3}, 3), expected);
    }
  }
}

TEST(PrefixSpan, AntiMonotoneAndDownwardClosed) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto mined = mined_set(random_db(rng), MiningConfig{2, 6, 3});
    for (const auto& [p, support] : mined) {
      if (p.size() < 2) continue;
      const IntSeq prefix(p.begin(), p.end() - 1);
      ASSERT_TRUE(mined.contains(prefix));
      EXPECT_LE(support, mined.at(prefix));
    }
  }
}

TEST(PrefixSpan, OneSequenceSupportsEqualOccurrenceCounts) {
  std::mt19937 rng(11);
  const auto db = random_db(rng);
  const auto mined = mined_set(db, MiningConfig{1, 1, 3});
  for (const auto& [p, support] : mined) {
    std::size_t direct = 0;
    for (const auto& s : db) direct += std::find(s.begin(), s.end(), p[0]) != s.end();
    EXPECT_EQ(support, direct);
  }
}

TEST(Project, FirstOccurrenceSuffixes) {
  const auto suffixes = [](const std::vector<IntSeq>& seqs, int symbol) {
    const SequenceDB db = build_sequence_db(transactions_from(seqs));
    const auto id = db.dictionary.find(ItemKey{ItemKind::MI, "s" + std::to_string(symbol)});
    std::vector<IntSeq> out;
    if (!id) return out;
    const ProjectedView view = ProjectedView::full(db).project(*id);
    for (std::size_t i = 0; i < view.size(); ++i) {
      IntSeq s;
      for (const ItemId item : view.suffix(i)) s.push_back(std::stoi(db.dictionary.key(item).name.substr(1)));
      out.push_back(s);
    }
    return out;
  };
  EXPECT_EQ(suffixes({{1, 2, 3}}, 1), (std::vector<IntSeq>{{2, 3}}));
  EXPECT_EQ(suffixes({{1, 2, 1, 3}}, 1), (std::vector<IntSeq>{{2, 1, 3}}));
  EXPECT_EQ(suffixes({{2, 3}, {1}}, 1), (std::vector<IntSeq>{{}}));
  const SequenceDB db = build_sequence_db(transactions_from({{2, 3}, {1}}));
  EXPECT_EQ(ProjectedView::full(db).project(*db.dictionary.find(ItemKey{ItemKind::MI, "s1"})).entries().front().sequence,
            1u);
}

TEST(Score, ProductRule) {
  EXPECT_EQ(score_pattern(1, 1), 1u);
  EXPECT_EQ(score_pattern(3, 2), 6u);
  EXPECT_GT(score_pattern(2, 2), score_pattern(1, 3));
}

TEST(MinePatterns, FixtureRankingConfidenceAndExemplars) {
  const SequenceDB db = build_sequence_db(transactions_from(kFixture));
  const MiningResult result = mine_patterns(db, MiningConfig{2, 6, 3});
  ASSERT_EQ(result.patterns.size(), 5u);
  std::vector<IntSeq> order;
  for (const auto& p : result.patterns) order.push_back(symbols_of(p.items));
  EXPECT_EQ(order, (std::vector<IntSeq>{{1, 3}, {2, 3}, {3}, {1}, {2}}));
  const auto& ac = result.patterns[0];
  EXPECT_EQ(ac.k, 2u);
  EXPECT_EQ(ac.support, 2u);
  EXPECT_EQ(ac.score, 4u);
  EXPECT_EQ(ac.rank, 1u);
  EXPECT_DOUBLE_EQ(ac.confidence, 1.0);
  EXPECT_EQ(ac.exemplars, (std::vector<std::string>{"S1", "S2"}));
  EXPECT_DOUBLE_EQ(result.patterns[2].confidence, 1.0);
  EXPECT_DOUBLE_EQ(result.patterns[4].confidence, 2.0 / 3.0);
  for (std::size_t i = 0; i < result.patterns.size(); ++i) EXPECT_EQ(result.patterns[i].rank, i + 1);
}

TEST(MinePatterns, ExemplarsTruncatedInDbOrder) {
  std::vector<IntSeq> seqs(8, IntSeq{1, 2});
  seqs.push_back({3});
  const SequenceDB db = build_sequence_db(transactions_from(seqs));
  const auto result = mine_patterns(db, MiningConfig{2, 6, 3});
  ASSERT_FALSE(result.patterns.empty());
  EXPECT_EQ(result.patterns[0].exemplars, (std::vector<std::string>{"S1", "S2", "S3"}));
  const SequenceDB single = build_sequence_db(transactions_from({{1, 2}, {3}}));
  const auto one = mine_patterns(single, MiningConfig{1, 6, 3});
  for (const auto& p : one.patterns) EXPECT_EQ(p.exemplars.size(), 1u);
}

TEST(MinePatterns, ComparatorAndPermutationOnRandomDbs) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const SequenceDB db = build_sequence_db(transactions_from(random_db(rng)));
    const auto result = mine_patterns(db, MiningConfig{1, 6, 3});
    for (std::size_t i = 0; i < result.patterns.size(); ++i) {
      const auto& p = result.patterns[i];
      EXPECT_EQ(p.rank, i + 1);
      EXPECT_EQ(p.score, p.k * p.support);
      EXPECT_GT(p.confidence, 0.0);
      EXPECT_LE(p.confidence, 1.0);
      if (i > 0) {
        EXPECT_TRUE(esdp::testing::oracle_ranks_before(result.patterns[i - 1], p));
      }
    }
    auto shuffled = result.patterns;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    rank_patterns(shuffled);
    EXPECT_EQ(shuffled, result.patterns);
  }
}

TEST(RankPatterns, LexicographicTieBreak) {
  SequencePattern x{{{ItemKind::MI, "b"}}, 1, 2, 1.0, 2, 0, {}};
  SequencePattern y{{{ItemKind::MI, "a"}}, 1, 2, 1.0, 2, 0, {}};
  std::vector<SequencePattern> ps = {x, y};
  rank_patterns(ps);
  EXPECT_EQ(ps[0].items[0].name, "a");
  EXPECT_EQ(ps[0].rank, 1u);
  std::vector<SequencePattern> single = {x};
  rank_patterns(single);
  EXPECT_EQ(single[0].rank, 1u);
}

TEST(MiningConfig, Validation) {
  EXPECT_THROW((MiningConfig{0, 6, 3}).validate(), ConfigError);
  EXPECT_THROW((MiningConfig{2, 0, 3}).validate(), ConfigError);
  EXPECT_THROW((MiningConfig{2, 6, 0}).validate(), ConfigError);
  EXPECT_NO_THROW((MiningConfig{}).validate());
}

TEST(RenderPattern, ArrowSeparated) {
  SequencePattern p{{{ItemKind::MI, "a()"}, {ItemKind::FD, "x.Y"}}, 2, 1, 1.0, 2, 1, {}};
  EXPECT_EQ(render_pattern(p), "MI a() \xe2\x86\x92 FD x.Y");
}
