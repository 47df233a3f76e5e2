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

#include "rdfpt/storage/store_block.h"

#include "rdfpt/error.h"

namespace rdfpt::storage {

void StoreBlock::append(Cell cell) {
  if (sealed_) throw InvalidArgument("append to a sealed block");
  if (!cells_.empty() && !(cells_.back().key < cell.key)) {
    throw InvalidArgument("block cells must be appended in increasing order");
  }
  cells_.push_back(std::move(cell));
}

void StoreBlock::seal() {
  if (sealed_) return;
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i == 0 || cells_[i].key.row != cells_[i - 1].key.row ||
        cells_[i].key.column != cells_[i - 1].key.column) {
      ++distinct;
    }
  }
  bloom_ = BloomFilter::for_capacity(distinct, fp_rate_);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i == 0 || cells_[i].key.row != cells_[i - 1].key.row ||
        cells_[i].key.column != cells_[i - 1].key.column) {
      bloom_.add(bloom_key(cells_[i].key.row, cells_[i].key.column));
    }
  }
  sealed_ = true;
}

StoreBlock StoreBlock::from_parts(std::vector<Cell> cells, BloomFilter bloom) {
  StoreBlock block;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (!(cells[i - 1].key < cells[i].key)) {
      throw InvalidArgument("persisted block is not sorted");
    }
  }
  block.cells_ = std::move(cells);
  block.bloom_ = std::move(bloom);
  block.sealed_ = true;
  return block;
}

const CellKey& StoreBlock::first_key() const {
  if (cells_.empty()) throw InvalidArgument("empty block has no first key");
  return cells_.front().key;
}

const CellKey& StoreBlock::last_key() const {
  if (cells_.empty()) throw InvalidArgument("empty block has no last key");
  return cells_.back().key;
}

bool StoreBlock::bloom_check(std::string_view row,
                             std::string_view column) const {
  if (!sealed_) throw InvalidArgument("bloom check on an unsealed block");
  return bloom_.may_contain(bloom_key(row, column));
}

bool bloom_check(const StoreBlock& block, std::string_view row,
                 std::string_view column) {
  return block.bloom_check(row, column);
}

}  // namespace rdfpt::storage
