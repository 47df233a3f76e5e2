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
#include <optional>
#include <string>
#include <vector>

#include "rdfpt/rdf/value.h"

namespace rdfpt::exec {

using Cell = std::optional<rdf::Value>;

struct ResultRow {
  std::vector<std::string> cells;  // rendered output
  std::vector<Cell> sort_keys;     // ORDER BY values, possibly not projected
};

struct ResultSet {
  std::vector<std::string> header;
  std::vector<ResultRow> rows;

  // Header line then one tab-separated line per row.
  std::string to_tsv() const;
};

struct StageMetrics {
  int id = 0;
  std::string name;
  std::string kind;
  std::uint64_t records_in = 0;
  std::uint64_t records_out = 0;
  std::uint64_t shuffled_records = 0;
  std::uint64_t shuffled_bytes = 0;
  std::uint64_t blocks_read = 0;
  std::uint64_t blocks_skipped = 0;
  std::uint64_t cells_read = 0;
};

struct ExecMetrics {
  std::vector<StageMetrics> stages;

  StageMetrics totals() const;
  // One {"type":"stage",...} record per stage then {"type":"total",...}.
  std::string to_jsonl() const;
};

// "[a, b]" of rendered values sorted bytewise, NULL when empty.
std::string render_list(const std::vector<rdf::Value>& values);

}  // namespace rdfpt::exec
