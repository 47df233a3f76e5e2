// Copyright 2026 The rdfpt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "rdfpt/error.h"
#include "rdfpt/storage/block_file.h"
#include "rdfpt/storage/bloom_filter.h"
#include "rdfpt/storage/manifest.h"
#include "rdfpt/storage/property_table.h"

namespace rdfpt::storage {
namespace {

using rdf::Value;

std::string key(const char* prefix, int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%03d", prefix, i);
  return buf;
}

TEST(Table, CreateRegions) {
  EXPECT_EQ(create_table({}).region_count(), 1u);
  EXPECT_EQ(create_table({"m"}).region_count(), 2u);
  EXPECT_THROW(create_table({"m", "c"}), InvalidArgument);
  EXPECT_THROW(create_table({"c", "c"}), InvalidArgument);
}

TEST(Table, RegionForKey) {
  auto t = create_table({"m"});
  EXPECT_EQ(region_for_key(t, "a"), 0u);
  EXPECT_EQ(region_for_key(t, "m"), 1u);
  EXPECT_EQ(region_for_key(t, "lzzz"), 0u);
  EXPECT_EQ(region_for_key(t, "zebra"), 1u);
  EXPECT_EQ(region_for_key(t, ""), 0u);
}

TEST(Table, NewestValueFirst) {
  auto t = create_table({});
  put(t, "albert", "foaf_age", Value::integer(30), 1);
  put(t, "albert", "foaf_age", Value::integer(31), 2);
  t.seal();
  auto row = get_row(t, "albert", {"foaf_age"});
  ASSERT_EQ(row.size(), 1u);
  ASSERT_EQ(row["foaf_age"].size(), 2u);
  EXPECT_EQ(row["foaf_age"][0], Value::integer(31));
  EXPECT_EQ(row["foaf_age"][1], Value::integer(30));
}

TEST(Table, MissingSubjectIsEmpty) {
  auto t = create_table({});
  put(t, "albert", "foaf_age", Value::integer(30), 1);
  t.seal();
  EXPECT_TRUE(get_row(t, "nobody", {"foaf_age"}).empty());
  EXPECT_TRUE(get_row(t, "albert", {"foaf_name"}).empty());
}

TEST(Table, ReadsRequireSeal) {
  auto t = create_table({});
  put(t, "a", "c", Value::string("x"), 1);
  EXPECT_THROW(get_row(t, "a", {"c"}), Error);
  t.seal();
  EXPECT_THROW(put(t, "b", "c", Value::string("y"), 1), Error);
}

TEST(Table, ScanEmpty) {
  auto t = create_table({"m"});
  t.seal();
  int rows = 0;
  scan(t, {}, std::nullopt, [&](Row&&) { ++rows; });
  EXPECT_EQ(rows, 0);
}

TEST(Table, ScanVisitsRowsInOrderAcrossRegions) {
  auto t = create_table({"d", "k"}, {.block_capacity = 3});
  std::vector<std::string> keys = {"q", "a", "k", "e", "c", "z", "d"};
  for (const auto& k : keys) {
    put(t, k, "c1", Value::string(k), 1);
    put(t, k, "c2", Value::integer(1), 1);
  }
  t.seal();
  std::vector<std::string> seen;
  ReadMetrics m;
  scan(t, {"c1"}, std::nullopt, [&](Row&& r) {
    EXPECT_EQ(r.cells.size(), 1u);
    seen.push_back(r.key);
  }, &m);
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(seen, keys);
  // Without a row filter every block is read exactly once.
  EXPECT_EQ(m.blocks_read, t.block_count());
  EXPECT_EQ(m.blocks_skipped, 0u);
  EXPECT_EQ(t.entry_count(), 14u);
}

// 100 rows over 10 blocks; "albert" straddles the boundary of blocks 4/5.
PropertyTable albert_table() {
  auto t = create_table({}, {.block_capacity = 100});
  auto fill = [&](const char* prefix) {
    for (int i = 0; i < 49; ++i) {
      for (int c = 0; c < 10; ++c) put(t, key(prefix, i), key("col", c), Value::integer(c), 1);
    }
  };
  fill("a");
  for (int c = 0; c < 20; ++c) put(t, "albert", key("col", c), Value::integer(c), 1);
  fill("b");
  t.seal();
  return t;
}

TEST(Table, BloomPrunesKeyedReads) {
  auto t = albert_table();
  ASSERT_EQ(t.block_count(), 10u);
  int holding = 0;
  for (const auto& b : t.region(0).blocks) {
    bool has = false;
    for (const auto& c : b->cells()) has = has || c.key.row == "albert";
    holding += has;
  }
  ASSERT_EQ(holding, 2);

  ReadMetrics m;
  auto row = get_row(t, "albert", {"col000", "col019"}, &m);
  EXPECT_EQ(row.size(), 2u);
  EXPECT_GE(m.blocks_read, 2u);
  EXPECT_LE(m.blocks_read, 3u);
  EXPECT_EQ(m.blocks_read + m.blocks_skipped, 10u);
}

TEST(Bloom, SizingFormula) {
  for (std::size_t n : {100u, 1000u, 12345u}) {
    for (double p : {0.01, 0.001, 0.05}) {
      auto f = BloomFilter::for_capacity(n, p);
      double ln2 = std::log(2.0);
      auto m = static_cast<std::uint64_t>(std::ceil(-double(n) * std::log(p) / (ln2 * ln2)));
      EXPECT_EQ(f.bits(), m) << n << " " << p;
      EXPECT_EQ(f.hashes(), static_cast<std::uint32_t>(std::lround(double(m) / n * ln2)));
    }
  }
}

TEST(Bloom, NoFalseNegativesAndLowFalsePositives) {
  std::mt19937_64 rng(7);
  auto f = BloomFilter::for_capacity(5000, kDefaultBloomFpRate);
  std::vector<std::string> in;
  for (int i = 0; i < 5000; ++i) {
    in.push_back(bloom_key("s" + std::to_string(rng()), "p" + std::to_string(i % 40)));
    f.add(in.back());
  }
  for (const auto& k : in) ASSERT_TRUE(f.may_contain(k));
  int fp = 0;
  for (int i = 0; i < 10000; ++i) {
    fp += f.may_contain(bloom_key("absent" + std::to_string(i), "p0"));
  }
  EXPECT_LE(fp, 200);
}

TEST(Bloom, KeyHasSeparator) {
  EXPECT_NE(bloom_key("ab", "c"), bloom_key("a", "bc"));
}

TEST(Block, AppendOrderEnforced) {
  StoreBlock b;
  b.append({{"r", "c", 1}, Value::string("x")});
  EXPECT_THROW(b.append({{"a", "c", 1}, Value::string("y")}), Error);
  b.seal();
  EXPECT_TRUE(bloom_check(b, "r", "c"));
  EXPECT_EQ(b.first_key().row, "r");
}

TEST(Block, EncodeDecodeRoundTrip) {
  StoreBlock b;
  b.append({{"r1", "c", 1}, Value::string("with\0nul")});
  b.append({{"r1", "d", 9}, Value{rdf::ValueKind::kDate, "2008-01-01"}});
  b.append({{"r2", "c", 1}, Value::uri("http://x.org/y")});
  b.seal();
  std::string bytes = encode_block(b);
  StoreBlock back = decode_block(bytes);
  EXPECT_EQ(back.cells(), b.cells());
  EXPECT_EQ(back.bloom(), b.bloom());
  EXPECT_EQ(encode_block(back), bytes);
  bytes[bytes.size() - 1] ^= 0x55;
  EXPECT_THROW(decode_block(bytes), Error);
}

TEST(Manifest, SaveAndReopen) {
  auto t = albert_table();
  t.columns().insert("col000");
  t.types().observe("col000", rdf::ValueKind::kInteger);
  t.prefixes().add("ex", "http://example.org/");
  auto dir = std::filesystem::temp_directory_path() / "rdfpt_storage_test";
  std::filesystem::remove_all(dir);
  save_table(t, dir.string());
  auto back = open_table(dir.string());
  EXPECT_EQ(back.block_count(), t.block_count());
  EXPECT_EQ(back.entry_count(), t.entry_count());
  EXPECT_EQ(back.columns(), t.columns());
  EXPECT_EQ(back.types(), t.types());
  EXPECT_EQ(back.prefixes(), t.prefixes());
  EXPECT_EQ(get_row(back, "albert", {"col007"}), get_row(t, "albert", {"col007"}));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace rdfpt::storage
