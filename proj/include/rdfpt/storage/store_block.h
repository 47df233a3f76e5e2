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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rdfpt/rdf/value.h"
#include "rdfpt/storage/bloom_filter.h"

namespace rdfpt::storage {

// Single column family; the label only shows up in diagnostics.
inline constexpr std::string_view kColumnFamily = "p";

struct CellKey {
  std::string row;
  std::string column;
  std::uint64_t timestamp = 0;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct Cell {
  CellKey key;
  rdf::Value value;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// An immutable sorted run of cells with a rowcol bloom filter. Cells are
// appended in strictly increasing key order; seal() sizes and fills the
// filter from the distinct (row, column) pairs.
class StoreBlock {
 public:
  explicit StoreBlock(double fp_rate = kDefaultBloomFpRate)
      : fp_rate_(fp_rate) {}

  void append(Cell cell);
  void seal();

  // Rebuilds a sealed block from persisted parts.
  static StoreBlock from_parts(std::vector<Cell> cells, BloomFilter bloom);

  bool sealed() const { return sealed_; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const CellKey& first_key() const;
  const CellKey& last_key() const;
  const BloomFilter& bloom() const { return bloom_; }

  bool bloom_check(std::string_view row, std::string_view column) const;

 private:
  double fp_rate_;
  bool sealed_ = false;
  std::vector<Cell> cells_;
  BloomFilter bloom_;
};

bool bloom_check(const StoreBlock& block, std::string_view row,
                 std::string_view column);

}  // namespace rdfpt::storage
