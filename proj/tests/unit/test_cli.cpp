// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include <gtest/gtest.h>

#include <sstream>

#include "esdp/cli/cli.hpp"
#include "esdp/cli/commands.hpp"
#include "esdp/common/error.hpp"
#include "esdp/store/central.hpp"
#include "esdp/store/mined.hpp"
#include "test_support.hpp"

using namespace esdp;
using esdp::testing::TempDir;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli::run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  TempDir dir;
  std::string central() const { return (dir.path() / "central.xml").string(); }
  std::string mined() const { return (dir.path() / "mined.xml").string(); }
  std::vector<std::string> with_repos(std::vector<std::string> args) const {
    args.insert(args.end(), {"--central", central(), "--mined", mined(), "--now", "2026-10-16T00:00:00Z"});
    return args;
  }
  void build_and_mine(const std::filesystem::path& config) {
    auto args = with_repos({"build", "--config", config.string()});
    const CliRun b = run(args);
    ASSERT_EQ(b.code, 0) << b.err;
    const CliRun m = run(with_repos({"mine"}));
    ASSERT_EQ(m.code, 0) << m.err;
  }
};

std::size_t count_lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_F(CliTest, BuildFiveFileFixture) {
  for (int i = 0; i < 5; ++i) {
    esdp::testing::write_file(dir.path() / "src" / ("p/F" + std::to_string(i) + ".java"),
                              "package p;\nclass F" + std::to_string(i) + " {\n  void f() {\n    g();\n  }\n}\n");
  }
  const auto config = esdp::testing::write_config(dir.path(), {{"s", "src"}});
  const CliRun r = run(with_repos({"build", "--config", config.string()}));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("units: 5"), std::string::npos);
  EXPECT_NE(r.out.find("transactions: 10 (method 5, class 5)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("items:"), std::string::npos);
  EXPECT_NE(r.out.find("repository fresh"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(central()));
}

TEST_F(CliTest, MissingConfigIsUsageError) {
  EXPECT_EQ(run(with_repos({"build", "--config", (dir.path() / "nope.conf").string()})).code, 2);
  EXPECT_EQ(run(with_repos({"build"})).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, EmptyCorpusFails) {
  std::filesystem::create_directories(dir.path() / "empty");
  const auto config = esdp::testing::write_config(dir.path(), {{"s", "empty"}});
  const CliRun r = run(with_repos({"build", "--config", config.string()}));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("no source units"), std::string::npos);
}

TEST_F(CliTest, StaleRepositoryWarns) {
  const auto corpus = esdp::testing::write_planted_corpus(dir.path());
  ASSERT_EQ(run(with_repos({"build", "--config", corpus.config.string()})).code, 0);
  const CliRun r = run({"stats", "--central", central(), "--mined", mined(), "--now", "2027-02-01T00:00:00Z"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("repository stale: 108 days"), std::string::npos) << r.err;
  const CliRun rebuild = run({"build", "--config", corpus.config.string(), "--central", central(), "--now",
                           "2027-02-01T00:00:00Z"});
  EXPECT_NE(rebuild.err.find("repository stale: 108 days"), std::string::npos) << rebuild.err;
}

TEST_F(CliTest, MineAndQueryPlanted) {
  const auto corpus = esdp::testing::write_planted_corpus(dir.path());
  build_and_mine(corpus.config);
  const CliRun q = run(with_repos({"query", "alphaStep()"}));
  ASSERT_EQ(q.code, 0) << q.err;
  const std::string first_line = q.out.substr(0, q.out.find('\n'));
  EXPECT_EQ(first_line,
            "1\t24\t8\t1.000000\tMI alphaStep(arity=0):? \xe2\x86\x92 MI betaStep(arity=0):? \xe2\x86\x92 MI "
            "gammaStep(arity=0):?");
  EXPECT_NE(q.out.find("elapsed:"), std::string::npos);
}

TEST_F(CliTest, QuerySkeletonAndXml) {
  const auto corpus = esdp::testing::write_planted_corpus(dir.path());
  build_and_mine(corpus.config);
  const CliRun q = run(with_repos({"query", "--skeleton", "alphaStep()"}));
  ASSERT_EQ(q.code, 0);
  EXPECT_NE(q.out.find("// pattern: MI alphaStep"), std::string::npos);
  EXPECT_NE(q.out.find(">"), std::string::npos);
  const CliRun x = run(with_repos({"query", "--xml", "--skeleton", "alphaStep()"}));
  ASSERT_EQ(x.code, 0);
  EXPECT_NE(x.out.find("<recommendation query=\"alphaStep()\""), std::string::npos);
  EXPECT_NE(x.out.find("<skeleton"), std::string::npos);
}

TEST_F(CliTest, MineConfigErrors) {
  const auto corpus = esdp::testing::write_planted_corpus(dir.path());
  build_and_mine(corpus.config);
  EXPECT_EQ(run(with_repos({"mine", "--min-support", "0"})).code, 2);
  EXPECT_EQ(run(with_repos({"mine", "--min-support", "abc"})).code, 2);
  const CliRun big = run(with_repos({"mine", "--min-support", "1000"}));
  EXPECT_EQ(big.code, 0);
  EXPECT_NE(esdp::testing::read_file(mined()).find("count=\"0\""), std::string::npos);
  const CliRun q = run(with_repos({"query", "alphaStep()"}));
  EXPECT_EQ(q.code, 0);
  EXPECT_NE(q.out.find("0 results"), std::string::npos);
  EXPECT_EQ(run(with_repos({"query", "   "})).code, 2);
}

TEST_F(CliTest, CorruptCentralNamesParseError) {
  esdp::testing::write_file(central(), "<esdp-repository version=\"1\"");
  const CliRun r = run(with_repos({"mine"}));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line"), std::string::npos);
}

TEST_F(CliTest, ReplSession) {
  const auto corpus = esdp::testing::write_desk_corpus(dir.path());
  build_and_mine(corpus.config);
  const CliRun r = run(with_repos({"repl"}), "Connection\n?Conn\n\n:quit\nnever reached\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Connection\nConnectionPool\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("error: query is blank"), std::string::npos);
  EXPECT_NE(r.out.find("java.sql.Connection"), std::string::npos);
}

TEST_F(CliTest, BenchDefaultQueries) {
  const auto corpus = esdp::testing::write_desk_corpus(dir.path());
  build_and_mine(corpus.config);
  const std::string csv = (dir.path() / "bench.csv").string();
  const CliRun r = run(with_repos({"bench", "--runs", "3", "--csv", csv}));
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = esdp::testing::read_file(csv);
  EXPECT_EQ(count_lines(text), 6u);
  EXPECT_TRUE(text.starts_with("query,median_ms,first_match_rank,entries\nConnection,"));
  for (const char* q : {"\nXMLParser,", "\ngetConnection(),", "\nActionListener,", "\nInputMissmatchException,"}) {
    EXPECT_NE(text.find(q), std::string::npos) << q;
  }
}

TEST_F(CliTest, BenchBadQueryFiles) {
  const auto corpus = esdp::testing::write_planted_corpus(dir.path());
  build_and_mine(corpus.config);
  esdp::testing::write_file(dir.path() / "empty.txt", "\n# only a comment\n");
  EXPECT_EQ(run(with_repos({"bench", (dir.path() / "empty.txt").string()})).code, 1);
  EXPECT_EQ(run(with_repos({"bench", (dir.path() / "missing.txt").string()})).code, 1);
}

TEST_F(CliTest, BenchExpectedPatternRank) {
  const auto corpus = esdp::testing::write_planted_corpus(dir.path());
  build_and_mine(corpus.config);
  esdp::testing::write_file(dir.path() / "q.txt",
                            "alphaStep()\tMI alphaStep(arity=0):? \xe2\x86\x92 MI betaStep(arity=0):? \xe2\x86\x92 MI "
                            "gammaStep(arity=0):?\n");
  const CliRun r = run(with_repos({"bench", (dir.path() / "q.txt").string()}));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("alphaStep(),"), std::string::npos);
  EXPECT_NE(r.out.find(",1,"), std::string::npos) << r.out;
}

TEST_F(CliTest, StatsMatchRecount) {
  const auto corpus = esdp::testing::write_desk_corpus(dir.path());
  build_and_mine(corpus.config);
  const CliRun r = run(with_repos({"stats"}));
  ASSERT_EQ(r.code, 0);
  const CentralRepository repo = read_central_xml(esdp::testing::read_file(central()));
  std::size_t methods = 0;
  for (const auto& tx : repo.transactions) methods += tx.block == BlockKind::Method;
  EXPECT_NE(r.out.find("files: " + std::to_string(corpus.files) + "\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("method transactions: " + std::to_string(methods) + "\n"), std::string::npos);
  const MinedRepository m = read_mined_xml(esdp::testing::read_file(mined()));
  EXPECT_NE(r.out.find("patterns: " + std::to_string(m.patterns().size()) + "\n"), std::string::npos);
  EXPECT_NE(r.out.find("prominent API: java."), std::string::npos) << r.out;
}

TEST_F(CliTest, StatsPartialAndAbsent) {
  const auto corpus = esdp::testing::write_planted_corpus(dir.path());
  ASSERT_EQ(run(with_repos({"build", "--config", corpus.config.string()})).code, 0);
  const CliRun partial = run(with_repos({"stats"}));
  EXPECT_EQ(partial.code, 0);
  EXPECT_EQ(partial.out.find("patterns:"), std::string::npos);
  std::filesystem::remove(central());
  EXPECT_EQ(run(with_repos({"stats"})).code, 1);
}

TEST(BenchQueries, Parsing) {
  const auto qs = cli::parse_bench_queries("# c\nConnection\r\n\ngetConnection()\tMI x\n");
  ASSERT_EQ(qs.size(), 2u);
  EXPECT_EQ(qs[0].query, "Connection");
  EXPECT_FALSE(qs[0].expected);
  EXPECT_EQ(qs[1].expected, "MI x");
  EXPECT_THROW(cli::parse_bench_queries("\n\n"), ConfigError);
}

TEST(BenchQueries, Median) {
  EXPECT_DOUBLE_EQ(cli::median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_DOUBLE_EQ(cli::median({4.0, 1.0, 2.0, 3.0}), 2.5);
}
