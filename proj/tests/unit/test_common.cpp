// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include <gtest/gtest.h>

#include "esdp/common/digest.hpp"
#include "esdp/common/error.hpp"
#include "esdp/common/source_unit.hpp"
#include "esdp/common/strings.hpp"
#include "esdp/common/timestamp.hpp"

using namespace esdp;

TEST(Digest, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Digest, ChangesWithContent) { EXPECT_NE(sha256_hex("class A {}"), sha256_hex("class A { }")); }

TEST(Timestamp, FormatsAndParses) {
  const Timestamp t = parse_iso8601("2026-10-16T08:05:09Z");
  EXPECT_EQ(format_iso8601(t), "2026-10-16T08:05:09Z");
  EXPECT_EQ(format_iso8601(Timestamp{}), "1970-01-01T00:00:00Z");
}

TEST(Timestamp, RejectsMalformed) {
  EXPECT_THROW(parse_iso8601("2026-10-16 08:05:09Z"), Error);
  EXPECT_THROW(parse_iso8601("2026-02-30T00:00:00Z"), Error);
  EXPECT_THROW(parse_iso8601("2026-10-16T24:00:00Z"), Error);
  EXPECT_THROW(parse_iso8601("2026-1x-16T00:00:00Z"), Error);
}

TEST(Strings, TrimAndCase) {
  EXPECT_EQ(trim("  a b \t\r\n"), "a b");
  EXPECT_EQ(trim("   "), "");
  EXPECT_EQ(to_lower("GetConnection"), "getconnection");
  EXPECT_TRUE(starts_with_icase("Connection", "conn"));
  EXPECT_FALSE(starts_with_icase("Co", "conn"));
  EXPECT_TRUE(contains_icase("java.sql.Connection", "CONNECTION"));
  EXPECT_TRUE(contains_icase("x", ""));
}

TEST(Strings, SplitJoin) {
  const auto parts = split("a,,b", ',');
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[1], "");
  EXPECT_EQ(join(parts, "|"), "a||b");
}

TEST(Strings, ParseLongIsStrict) {
  EXPECT_EQ(parse_long("42"), 42);
  EXPECT_FALSE(parse_long("-3"));
  EXPECT_FALSE(parse_long("+3"));
  EXPECT_FALSE(parse_long(""));
  EXPECT_FALSE(parse_long("4 2"));
  EXPECT_FALSE(parse_long("12abc"));
  EXPECT_FALSE(parse_long("99999999999999999999999"));
}

TEST(Strings, SanitizeReplacesInvalidUtf8) {
  std::size_t replaced = 0;
  EXPECT_EQ(sanitize_utf8("ok \xc3\xa9", &replaced), "ok \xc3\xa9");
  EXPECT_EQ(replaced, 0u);
  EXPECT_EQ(sanitize_utf8("a\xff" "b", &replaced), "a\xef\xbf\xbd" "b");
  EXPECT_EQ(replaced, 1u);
  EXPECT_EQ(sanitize_utf8("\xc3"), "\xef\xbf\xbd");
}

TEST(LineIndex, MapsOffsetsToLines) {
  const std::string text = "a\nbc\r\n\nd";
  const LineIndex index(text);
  EXPECT_EQ(index.line_count(), 4u);
  EXPECT_EQ(index.line_of(0), 1u);
  EXPECT_EQ(index.line_of(2), 2u);
  EXPECT_EQ(index.line_of(7), 4u);
  EXPECT_EQ(index.line_text(text, 2), "bc");
  EXPECT_EQ(index.line_text(text, 3), "");
  EXPECT_EQ(index.line_text(text, 4), "d");
}

TEST(LineIndex, EmptyTextHasOneLine) {
  const LineIndex index("");
  EXPECT_EQ(index.line_count(), 1u);
}
