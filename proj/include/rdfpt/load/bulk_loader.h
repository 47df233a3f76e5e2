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
#include <iosfwd>
#include <string>
#include <vector>

#include "rdfpt/mr/engine.h"
#include "rdfpt/rdf/prefix_table.h"
#include "rdfpt/storage/property_table.h"

namespace rdfpt::load {

inline constexpr std::size_t kSplitBytes = 64 * 1024;

// One line of input together with its 0-based ordinal in the whole file.
// The ordinal doubles as the cell timestamp.
struct InputLine {
  std::uint64_t ordinal = 0;
  std::string text;
};
using InputSplit = std::vector<InputLine>;

// Cuts the input into line-aligned chunks of about `split_bytes` bytes.
std::vector<InputSplit> make_splits(std::istream& in,
                                    std::size_t split_bytes = kSplitBytes);

struct SamplerConfig {
  double probability = 0.10;  // chance that a key is considered
  double quota = 0.10;        // sample size as a fraction of sampled keys
  double max_splits = 0.50;   // fraction of splits that are read at all
  std::uint64_t seed = 42;

  // Throws InvalidArgument unless every fraction is in (0, 1].
  void validate() const;
};

// Map: emit the compact subject of every statement. Reduce: one output per
// key. The result is sorted and duplicate free. Parse errors are rethrown
// with their line number.
std::vector<std::string> extract_unique_subjects(
    const std::vector<InputSplit>& splits, const rdf::PrefixTable& prefixes,
    std::size_t parallelism = 1, mr::JobMetrics* metrics = nullptr);

// Picks regions-1 boundary keys. The sorted key list is read as `nsplits`
// hash-partitioned input splits (the dedupe job's reducer outputs, each
// covering the whole key range); a seeded random subset of them (max_splits) is
// sampled key by key with `probability` until the quota is full, after
// which new picks replace random old ones. Boundaries sit at the even
// quantiles of the sorted sample. regions must be a power of two.
std::vector<std::string> sample_split_keys(const std::vector<std::string>& keys,
                                           std::size_t regions,
                                           const SamplerConfig& config,
                                           std::size_t nsplits = 1);

struct StageTiming {
  std::string name;
  double millis = 0;
};

struct LoadReport {
  std::uint64_t triples_read = 0;
  std::uint64_t triples_loaded = 0;
  std::vector<std::string> warnings;
  std::uint64_t subjects = 0;
  std::vector<std::uint64_t> region_subjects;
  std::vector<std::string> split_keys;
  std::uint64_t entries = 0;
  std::vector<StageTiming> stages;
};

// Map: parse, compress URIs, infer primitive types, emit (subject, cell).
// The partitioner is the table's region lookup, so all cells of a subject
// reach one reducer, which writes that region's sorted blocks. Blocks are
// then installed and the table sealed.
LoadReport transform_and_load(const std::vector<InputSplit>& splits,
                              storage::PropertyTable& table,
                              std::size_t parallelism = 1);

void install_blocks(storage::PropertyTable& table,
                    std::vector<storage::StoreBlock> blocks);

struct LoadOptions {
  std::size_t regions = 1;
  SamplerConfig sampler;
  std::size_t parallelism = 1;
  std::size_t split_bytes = kSplitBytes;
  storage::TableOptions table;
};

struct LoadResult {
  storage::PropertyTable table;
  LoadReport report;
};

// The whole pipeline: splits, unique subjects, split keys, transform,
// install.
LoadResult bulk_load(std::istream& in, const rdf::PrefixTable& prefixes,
                     const LoadOptions& options);

// One JSON object per line: a summary record, then region, stage and
// warning records.
std::string to_jsonl(const LoadReport& report);

}  // namespace rdfpt::load
