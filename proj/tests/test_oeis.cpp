/*
   Copyright 2026 The caylerian Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "caylerian/oeis.hpp"

using namespace caylerian;

namespace {
BFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in, "A000670");
}
}  // namespace

TEST(BFile, ParsesCommentsAndBlanks) {
  const BFile f = parse("# header\n\n0 1\n1 1\r\n  # indented comment\n2 3\n3 13\n");
  ASSERT_EQ(f.entries.size(), 4u);
  EXPECT_EQ(f.entries[3].first, 3);
  EXPECT_EQ(f.entries[3].second, 13);
}

TEST(BFile, BigValuesAndNegativeIndices) {
  const BFile f = parse("-1 0\n0 123456789012345678901234567890\n");
  EXPECT_EQ(f.entries[0].first, -1);
  EXPECT_EQ(f.entries[1].second, BigInt("123456789012345678901234567890"));
}

TEST(BFile, RejectsMalformedLines) {
  EXPECT_THROW(parse("0 1\n1\n"), BFileError);
  EXPECT_THROW(parse("0 1\n1 x\n"), BFileError);
  EXPECT_THROW(parse("0 1 2\n"), BFileError);
  EXPECT_THROW(parse("a 1\n"), BFileError);
  EXPECT_THROW(parse("1 1\n1 2\n"), BFileError);
  EXPECT_THROW(parse("2 1\n1 2\n"), BFileError);
}

TEST(BFile, Names) {
  EXPECT_EQ(bfile_name("A120733"), "b120733.txt");
  EXPECT_THROW(bfile_name("A12073"), std::invalid_argument);
  EXPECT_THROW(bfile_name("B120733"), std::invalid_argument);
}

TEST(EngineTerms, Layout) {
  const auto fub = engine_terms("A000670", 3);
  ASSERT_EQ(fub.size(), 4u);
  EXPECT_EQ(fub[3].second, 13);
  const auto tri = engine_terms("A366173", 3);
  ASSERT_EQ(tri.size(), 6u);
  EXPECT_EQ(tri.front().first, 1);
  EXPECT_EQ(tri[3].second, 1);
  EXPECT_EQ(tri[4].second, 8);
  EXPECT_EQ(tri[5].second, 4);
  EXPECT_THROW(engine_terms("A000001", 3), std::invalid_argument);
}

TEST(Compare, FirstMismatchReported) {
  const BFile f = parse("0 1\n1 1\n2 3\n3 14\n4 75\n");
  const OeisComparison c = compare_terms(f, engine_terms("A000670", 6));
  EXPECT_FALSE(c.ok());
  ASSERT_TRUE(c.first_mismatch.has_value());
  EXPECT_EQ(*c.first_mismatch, 3);
  EXPECT_EQ(c.expected, 14);
  EXPECT_EQ(c.actual, 13);
}

TEST(Compare, EmptyOverlapIsNotOk) {
  const BFile f = parse("20 1\n");
  EXPECT_FALSE(compare_terms(f, engine_terms("A000670", 4)).ok());
}

TEST(Fixtures, BundledFilesAgree) {
  for (const auto& id : supported_sequences()) {
    const BFile f = load_bfile(bundled_dir() / bfile_name(id), id);
    const std::size_t max_n = id == "A366173" ? 7 : 10;
    const OeisComparison c = compare_terms(f, engine_terms(id, max_n));
    EXPECT_TRUE(c.ok()) << id;
  }
}

TEST(Fetch, CachedFileIsReusedWithoutNetwork) {
  const auto dir = std::filesystem::temp_directory_path() / "caylerian-fetch-test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "b000670.txt") << "0 1\n1 1\n2 3\n";
  EXPECT_EQ(fetch_bfile("A000670", dir), dir / "b000670.txt");
  std::filesystem::remove_all(dir);
}

TEST(CacheDir, EnvironmentOverride) {
  ::setenv("CAYLERIAN_CACHE_DIR", "/tmp/some-cache", 1);
  EXPECT_EQ(cache_dir(), std::filesystem::path("/tmp/some-cache"));
  ::unsetenv("CAYLERIAN_CACHE_DIR");
  EXPECT_NE(cache_dir(), std::filesystem::path("/tmp/some-cache"));
}
