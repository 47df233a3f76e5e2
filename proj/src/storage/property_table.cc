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

#include "rdfpt/storage/property_table.h"

#include <algorithm>
#include <queue>

#include "rdfpt/error.h"

namespace rdfpt::storage {
namespace {

struct Cursor {
  const std::vector<Cell>* cells;
  std::size_t pos;
  std::size_t block;  // tiebreak so equal keys from two blocks stay ordered
};

struct CursorAfter {
  bool operator()(const Cursor& a, const Cursor& b) const {
    const CellKey& ka = (*a.cells)[a.pos].key;
    const CellKey& kb = (*b.cells)[b.pos].key;
    if (ka != kb) return kb < ka;
    return a.block > b.block;
  }
};

void finish_row(Row& row, const RowCallback& callback) {
  if (row.cells.empty()) return;
  for (auto& [col, values] : row.cells) std::reverse(values.begin(), values.end());
  callback(std::move(row));
}

}  // namespace

PropertyTable PropertyTable::create(std::vector<std::string> split_keys,
                                    TableOptions options) {
  for (std::size_t i = 0; i < split_keys.size(); ++i) {
    if (split_keys[i].empty()) {
      throw InvalidArgument("split keys must be non-empty");
    }
    if (i > 0 && !(split_keys[i - 1] < split_keys[i])) {
      throw InvalidArgument("split keys must be strictly ascending");
    }
  }
  if (options.block_capacity == 0) {
    throw InvalidArgument("block capacity must be positive");
  }
  PropertyTable t;
  t.options_ = options;
  t.split_keys_ = std::move(split_keys);
  t.regions_.resize(t.split_keys_.size() + 1);
  for (std::size_t i = 0; i < t.regions_.size(); ++i) {
    if (i > 0) t.regions_[i].start = t.split_keys_[i - 1];
    if (i < t.split_keys_.size()) t.regions_[i].end = t.split_keys_[i];
  }
  t.buffers_.resize(t.regions_.size());
  return t;
}

std::size_t PropertyTable::region_for_key(std::string_view row) const {
  auto it = std::upper_bound(split_keys_.begin(), split_keys_.end(), row,
                             [](std::string_view r, const std::string& s) {
                               return r < s;
                             });
  return static_cast<std::size_t>(it - split_keys_.begin());
}

void PropertyTable::put(const std::string& row, const std::string& column,
                        rdf::Value value, std::uint64_t timestamp) {
  if (sealed_) throw InvalidArgument("put on a sealed table");
  columns_.insert(column);
  buffers_[region_for_key(row)][CellKey{row, column, timestamp}] =
      std::move(value);
}

void PropertyTable::seal() {
  if (sealed_) return;
  for (std::size_t r = 0; r < regions_.size(); ++r) {
    std::vector<Cell> cells;
    cells.reserve(buffers_[r].size());
    for (auto& [key, value] : buffers_[r]) cells.push_back({key, value});
    for (auto& block :
         build_blocks(cells, options_.block_capacity, options_.bloom_fp_rate)) {
      regions_[r].blocks.push_back(
          std::make_shared<const StoreBlock>(std::move(block)));
    }
    buffers_[r].clear();
  }
  sealed_ = true;
}

void PropertyTable::install_blocks(std::vector<StoreBlock> blocks) {
  if (sealed_) throw LoadError("blocks can only be installed once");
  for (auto& block : blocks) {
    if (!block.sealed()) block.seal();
    if (block.empty()) continue;
    std::size_t r = region_for_key(block.first_key().row);
    if (!regions_[r].contains(block.last_key().row)) {
      throw LoadError("block [" + block.first_key().row + ", " +
                      block.last_key().row + "] straddles a region boundary");
    }
    for (const Cell& c : block.cells()) columns_.insert(c.key.column);
    regions_[r].blocks.push_back(
        std::make_shared<const StoreBlock>(std::move(block)));
  }
  seal();
}

void PropertyTable::require_sealed() const {
  if (!sealed_) throw InvalidArgument("table must be sealed before reading");
}

RowCells PropertyTable::get_row(const std::string& row,
                                const std::set<std::string>& columns,
                                ReadMetrics* metrics) const {
  if (columns.empty()) throw InvalidArgument("get_row needs at least one column");
  RowCells out;
  scan_region(region_for_key(row), columns, row,
              [&](Row&& r) { out = std::move(r.cells); }, metrics);
  return out;
}

void PropertyTable::scan(const std::set<std::string>& columns,
                         const std::optional<std::string>& row_filter,
                         const RowCallback& callback,
                         ReadMetrics* metrics) const {
  require_sealed();
  if (row_filter) {
    scan_region(region_for_key(*row_filter), columns, row_filter, callback,
                metrics);
    return;
  }
  for (std::size_t r = 0; r < regions_.size(); ++r) {
    scan_region(r, columns, std::nullopt, callback, metrics);
  }
}

void PropertyTable::scan_region(std::size_t region,
                                const std::set<std::string>& columns,
                                const std::optional<std::string>& row_filter,
                                const RowCallback& callback,
                                ReadMetrics* metrics) const {
  require_sealed();
  const Region& reg = regions_.at(region);
  ReadMetrics local;
  std::priority_queue<Cursor, std::vector<Cursor>, CursorAfter> heap;

  const std::set<std::string>& probe = columns.empty() ? columns_ : columns;
  for (std::size_t b = 0; b < reg.blocks.size(); ++b) {
    const StoreBlock& block = *reg.blocks[b];
    if (block.empty()) continue;
    std::size_t start = 0;
    if (row_filter) {
      if (!reg.contains(*row_filter)) {
        ++local.blocks_skipped;
        continue;
      }
      bool maybe = probe.empty();
      for (const auto& col : probe) {
        if (block.bloom_check(*row_filter, col)) {
          maybe = true;
          break;
        }
      }
      if (!maybe) {
        ++local.blocks_skipped;
        continue;
      }
      auto it = std::lower_bound(
          block.cells().begin(), block.cells().end(), *row_filter,
          [](const Cell& c, const std::string& r) { return c.key.row < r; });
      start = static_cast<std::size_t>(it - block.cells().begin());
    }
    ++local.blocks_read;
    if (start < block.size()) heap.push({&block.cells(), start, b});
  }

  Row current;
  bool have_row = false;
  while (!heap.empty()) {
    Cursor cur = heap.top();
    heap.pop();
    const Cell& cell = (*cur.cells)[cur.pos];
    if (row_filter && cell.key.row != *row_filter) continue;
    ++local.cells_read;
    if (!have_row || cell.key.row != current.key) {
      if (have_row) finish_row(current, callback);
      current = Row{cell.key.row, {}};
      have_row = true;
    }
    if (columns.empty() || columns.count(cell.key.column) != 0) {
      current.cells[cell.key.column].push_back(cell.value);
    }
    if (cur.pos + 1 < cur.cells->size()) {
      ++cur.pos;
      heap.push(cur);
    }
  }
  if (have_row) finish_row(current, callback);
  if (metrics != nullptr) metrics->add(local);
}

std::uint64_t PropertyTable::entry_count() const {
  std::uint64_t n = 0;
  for (const auto& r : regions_) {
    for (const auto& b : r.blocks) n += b->size();
  }
  for (const auto& buf : buffers_) n += buf.size();
  return n;
}

std::size_t PropertyTable::block_count() const {
  std::size_t n = 0;
  for (const auto& r : regions_) n += r.blocks.size();
  return n;
}

std::vector<StoreBlock> build_blocks(const std::vector<Cell>& sorted_cells,
                                     std::size_t capacity, double fp_rate) {
  std::vector<StoreBlock> out;
  for (std::size_t i = 0; i < sorted_cells.size(); i += capacity) {
    StoreBlock block(fp_rate);
    std::size_t end = std::min(sorted_cells.size(), i + capacity);
    for (std::size_t j = i; j < end; ++j) block.append(sorted_cells[j]);
    block.seal();
    out.push_back(std::move(block));
  }
  return out;
}

PropertyTable create_table(std::vector<std::string> split_keys,
                           TableOptions options) {
  return PropertyTable::create(std::move(split_keys), options);
}

std::size_t region_for_key(const PropertyTable& table, std::string_view row) {
  return table.region_for_key(row);
}

void put(PropertyTable& table, const std::string& subject,
         const std::string& predicate, rdf::Value value,
         std::uint64_t timestamp) {
  table.put(subject, predicate, std::move(value), timestamp);
}

RowCells get_row(const PropertyTable& table, const std::string& subject,
                 const std::set<std::string>& columns, ReadMetrics* metrics) {
  return table.get_row(subject, columns, metrics);
}

void scan(const PropertyTable& table, const std::set<std::string>& columns,
          const std::optional<std::string>& row_filter,
          const RowCallback& callback, ReadMetrics* metrics) {
  table.scan(columns, row_filter, callback, metrics);
}

}  // namespace rdfpt::storage
