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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rdfpt/rdf/prefix_table.h"
#include "rdfpt/rdf/type_map.h"
#include "rdfpt/storage/store_block.h"

namespace rdfpt::storage {

inline constexpr std::size_t kDefaultBlockCapacity = 4096;

struct TableOptions {
  std::size_t block_capacity = kDefaultBlockCapacity;
  double bloom_fp_rate = kDefaultBloomFpRate;
};

// Row-key range [start, end); `end` is open for the last region.
struct Region {
  std::string start;
  std::optional<std::string> end;
  std::vector<std::shared_ptr<const StoreBlock>> blocks;

  bool contains(std::string_view row) const {
    return row >= start && (!end || row < *end);
  }
};

struct ReadMetrics {
  std::uint64_t blocks_read = 0;
  std::uint64_t blocks_skipped = 0;
  std::uint64_t cells_read = 0;

  void add(const ReadMetrics& o) {
    blocks_read += o.blocks_read;
    blocks_skipped += o.blocks_skipped;
    cells_read += o.cells_read;
  }
};

// column -> values, newest timestamp first.
using RowCells = std::map<std::string, std::vector<rdf::Value>>;

struct Row {
  std::string key;
  RowCells cells;
};

using RowCallback = std::function<void(Row&&)>;

// Subject-keyed wide table. Writes go to per-region sorted buffers until
// seal() cuts them into bloom-filtered blocks; after that the table is
// read-only and safe for concurrent readers.
class PropertyTable {
 public:
  // Throws InvalidArgument unless split_keys is strictly ascending.
  static PropertyTable create(std::vector<std::string> split_keys,
                              TableOptions options = {});

  const std::vector<std::string>& split_keys() const { return split_keys_; }
  std::size_t region_count() const { return regions_.size(); }
  const Region& region(std::size_t i) const { return regions_.at(i); }
  const TableOptions& options() const { return options_; }

  std::size_t region_for_key(std::string_view row) const;

  void put(const std::string& row, const std::string& column,
           rdf::Value value, std::uint64_t timestamp);
  void seal();
  bool sealed() const { return sealed_; }

  // Attaches externally built sealed blocks; each block's first key picks
  // its region. A block that spills past its region's end is a LoadError.
  // Seals the table.
  void install_blocks(std::vector<StoreBlock> blocks);

  // Keyed reads consult the bloom filter of every block in the owning
  // region and only read blocks that may hold one of the columns.
  RowCells get_row(const std::string& row, const std::set<std::string>& columns,
                   ReadMetrics* metrics = nullptr) const;

  // Rows in key order restricted to `columns` (all when empty). A row
  // filter limits the scan to one row key and enables bloom pruning.
  void scan(const std::set<std::string>& columns,
            const std::optional<std::string>& row_filter,
            const RowCallback& callback, ReadMetrics* metrics = nullptr) const;
  void scan_region(std::size_t region, const std::set<std::string>& columns,
                   const std::optional<std::string>& row_filter,
                   const RowCallback& callback,
                   ReadMetrics* metrics = nullptr) const;

  std::uint64_t entry_count() const;
  std::size_t block_count() const;

  // Column universe (storage column names), the type map and the prefix
  // table used for compaction. Maintained by the loader.
  std::set<std::string>& columns() { return columns_; }
  const std::set<std::string>& columns() const { return columns_; }
  rdf::PredicateTypeMap& types() { return types_; }
  const rdf::PredicateTypeMap& types() const { return types_; }
  rdf::PrefixTable& prefixes() { return prefixes_; }
  const rdf::PrefixTable& prefixes() const { return prefixes_; }

 private:
  void require_sealed() const;

  TableOptions options_;
  std::vector<std::string> split_keys_;
  std::vector<Region> regions_;
  std::vector<std::map<CellKey, rdf::Value>> buffers_;
  bool sealed_ = false;
  std::set<std::string> columns_;
  rdf::PredicateTypeMap types_;
  rdf::PrefixTable prefixes_;
};

PropertyTable create_table(std::vector<std::string> split_keys,
                           TableOptions options = {});
std::size_t region_for_key(const PropertyTable& table, std::string_view row);
void put(PropertyTable& table, const std::string& subject,
         const std::string& predicate, rdf::Value value,
         std::uint64_t timestamp);
RowCells get_row(const PropertyTable& table, const std::string& subject,
                 const std::set<std::string>& columns,
                 ReadMetrics* metrics = nullptr);
void scan(const PropertyTable& table, const std::set<std::string>& columns,
          const std::optional<std::string>& row_filter,
          const RowCallback& callback, ReadMetrics* metrics = nullptr);

// Splits a sorted cell run into sealed blocks of at most `capacity` cells.
std::vector<StoreBlock> build_blocks(const std::vector<Cell>& sorted_cells,
                                     std::size_t capacity, double fp_rate);

}  // namespace rdfpt::storage
