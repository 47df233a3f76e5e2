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

#include "rdfpt/load/bulk_loader.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <random>
#include <set>

#include "json.hpp"
#include "rdfpt/error.h"
#include "rdfpt/rdf/ntriples.h"
#include "rdfpt/rdf/value.h"

namespace rdfpt::load {

using storage::Cell;
using storage::CellKey;
using storage::PropertyTable;
using storage::StoreBlock;

std::vector<InputSplit> make_splits(std::istream& in, std::size_t split_bytes) {
  if (split_bytes == 0) throw InvalidArgument("split size must be positive");
  std::vector<InputSplit> splits;
  InputSplit current;
  std::size_t bytes = 0;
  std::uint64_t ordinal = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bytes += line.size() + 1;
    current.push_back({ordinal++, std::move(line)});
    if (bytes >= split_bytes) {
      splits.push_back(std::move(current));
      current.clear();
      bytes = 0;
    }
  }
  if (!current.empty()) splits.push_back(std::move(current));
  return splits;
}

void SamplerConfig::validate() const {
  for (double f : {probability, quota, max_splits}) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw InvalidArgument("sampler fractions must lie in (0, 1]");
    }
  }
}

namespace {

// Parses one input line, turning parse errors into line-numbered ones.
std::optional<rdf::Triple> parse_line(const InputLine& line) {
  if (rdf::is_blank_or_comment(line.text)) return std::nullopt;
  try {
    return rdf::parse_ntriples(line.text);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line.ordinal + 1) + ": " +
                         e.message(),
                     e.offset());
  } catch (const UnsupportedFeature& e) {
    throw UnsupportedFeature(e.construct() + " (line " +
                             std::to_string(line.ordinal + 1) + ")");
  }
}

// Job failures carry the original exception; loaders report that one.
template <class Fn>
auto rethrow_cause(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const JobFailure& f) {
    if (f.cause()) std::rethrow_exception(f.cause());
    throw;
  }
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

struct PendingCell {
  std::string column;
  std::uint64_t timestamp = 0;
  rdf::Value value;
};

}  // namespace

std::vector<std::string> extract_unique_subjects(
    const std::vector<InputSplit>& splits, const rdf::PrefixTable& prefixes,
    std::size_t parallelism, mr::JobMetrics* metrics) {
  mr::MrJob<InputLine, char, std::string> job;
  job.name = "extract-unique-subjects";
  job.map = [&](const InputLine& line, mr::MapContext<char>& ctx) {
    if (auto t = parse_line(line)) ctx.emit(prefixes.compress(t->subject.value), 0);
  };
  job.reduce = [](const std::string& key, std::vector<char>&,
                  mr::ReduceContext<std::string>& ctx) { ctx.emit(key); };
  // One reducer keeps the output globally sorted.
  job.reducers = 1;
  auto result = rethrow_cause([&] { return mr::run_job(job, splits, parallelism); });
  if (metrics != nullptr) *metrics = result.metrics;
  return result.flatten();
}

std::vector<std::string> sample_split_keys(const std::vector<std::string>& keys,
                                           std::size_t regions,
                                           const SamplerConfig& config,
                                           std::size_t nsplits) {
  config.validate();
  if (regions == 0 || (regions & (regions - 1)) != 0) {
    throw InvalidArgument("region count must be a power of two");
  }
  if (!std::is_sorted(keys.begin(), keys.end()) ||
      std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw InvalidArgument("keys must be sorted and unique");
  }
  if (keys.size() < regions) {
    throw InvalidArgument("need at least " + std::to_string(regions) +
                          " keys, got " + std::to_string(keys.size()));
  }
  if (regions == 1) return {};

  nsplits = std::clamp<std::size_t>(nsplits, 1, keys.size());
  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> order(nsplits);
  for (std::size_t i = 0; i < nsplits; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  auto to_read = static_cast<std::size_t>(
      std::ceil(config.max_splits * static_cast<double>(nsplits)));
  to_read = std::clamp<std::size_t>(to_read, 1, nsplits);
  order.resize(to_read);
  std::sort(order.begin(), order.end());

  // The key list is the output of the dedupe job, whose reducers are fed by
  // the hash partitioner: split s holds the keys that hash to s, each split
  // spanning the whole key range.
  std::vector<bool> chosen(nsplits, false);
  for (std::size_t s : order) chosen[s] = true;
  std::vector<const std::string*> candidates;
  for (const auto& k : keys) {
    if (chosen[mr::default_partition(k, nsplits)]) candidates.push_back(&k);
  }
  auto quota = std::max<std::size_t>(
      static_cast<std::size_t>(
          std::ceil(config.quota * static_cast<double>(candidates.size()))),
      regions);

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double freq = config.probability;
  std::vector<std::string> sample;
  for (const std::string* k : candidates) {
    if (coin(rng) > freq) continue;
    if (sample.size() < quota) {
      sample.push_back(*k);
    } else {
      std::uniform_int_distribution<std::size_t> slot(0, quota - 1);
      sample[slot(rng)] = *k;
      // Keep later keys from crowding out earlier ones.
      freq *= static_cast<double>(quota - 1) / static_cast<double>(quota);
    }
  }
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  if (sample.size() < regions) sample = keys;

  std::vector<std::string> splits;
  double step = static_cast<double>(sample.size()) / static_cast<double>(regions);
  std::size_t last = 0;
  for (std::size_t i = 1; i < regions; ++i) {
    auto k = static_cast<std::size_t>(std::llround(step * static_cast<double>(i)));
    k = std::max(k, last + 1);
    if (k >= sample.size()) break;
    splits.push_back(sample[k]);
    last = k;
  }
  return splits;
}

void install_blocks(PropertyTable& table, std::vector<StoreBlock> blocks) {
  table.install_blocks(std::move(blocks));
}

LoadReport transform_and_load(const std::vector<InputSplit>& splits,
                              PropertyTable& table, std::size_t parallelism) {
  if (table.sealed()) throw LoadError("table is already loaded");
  LoadReport report;
  auto t0 = std::chrono::steady_clock::now();

  const rdf::PrefixTable& prefixes = table.prefixes();
  mr::MrJob<InputLine, PendingCell, Cell> job;
  job.name = "transform-and-load";
  job.map = [&](const InputLine& line, mr::MapContext<PendingCell>& ctx) {
    auto t = parse_line(line);
    if (!t) return;
    PendingCell cell;
    cell.column = prefixes.compress(t->predicate.value);
    cell.timestamp = line.ordinal;
    if (t->object.is_uri()) {
      cell.value = rdf::Value::uri(prefixes.compress(t->object.value));
    } else {
      rdf::Inferred inf = rdf::infer_primitive(t->object);
      if (inf.warning) {
        ctx.warn("line " + std::to_string(line.ordinal + 1) + ": " + *inf.warning);
      }
      cell.value = std::move(inf.value);
    }
    ctx.emit(prefixes.compress(t->subject.value), std::move(cell));
  };
  job.partitioner = [&](const std::string& key, std::size_t) {
    return table.region_for_key(key);
  };
  job.reducers = table.region_count();
  job.reduce = [](const std::string& key, std::vector<PendingCell>& cells,
                  mr::ReduceContext<Cell>& ctx) {
    std::sort(cells.begin(), cells.end(),
              [](const PendingCell& a, const PendingCell& b) {
                return std::tie(a.column, a.timestamp) <
                       std::tie(b.column, b.timestamp);
              });
    for (auto& c : cells) {
      ctx.emit(Cell{CellKey{key, c.column, c.timestamp}, std::move(c.value)});
    }
  };
  job.value_bytes = [](const PendingCell& c) {
    return c.column.size() + c.value.lexical.size() + 9;
  };

  auto result = rethrow_cause([&] { return mr::run_job(job, splits, parallelism); });
  report.stages.push_back({"transform", millis_since(t0)});

  auto t1 = std::chrono::steady_clock::now();
  std::vector<StoreBlock> blocks;
  report.region_subjects.assign(table.region_count(), 0);
  for (std::size_t r = 0; r < result.partitions.size(); ++r) {
    const auto& cells = result.partitions[r];
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i == 0 || cells[i].key.row != cells[i - 1].key.row) {
        ++report.region_subjects[r];
      }
      table.types().observe(cells[i].key.column, cells[i].value.kind);
    }
    auto region_blocks = storage::build_blocks(
        cells, table.options().block_capacity, table.options().bloom_fp_rate);
    std::move(region_blocks.begin(), region_blocks.end(), std::back_inserter(blocks));
  }
  install_blocks(table, std::move(blocks));
  report.stages.push_back({"install", millis_since(t1)});

  report.triples_read = result.metrics.map_output_records;
  report.triples_loaded = result.metrics.output_records;
  report.warnings = result.metrics.diagnostics;
  for (auto n : report.region_subjects) report.subjects += n;
  report.split_keys = table.split_keys();
  report.entries = table.entry_count();
  return report;
}

LoadResult bulk_load(std::istream& in, const rdf::PrefixTable& prefixes,
                     const LoadOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  auto splits = make_splits(in, options.split_bytes);
  double split_ms = millis_since(t0);

  auto t1 = std::chrono::steady_clock::now();
  auto subjects = extract_unique_subjects(splits, prefixes, options.parallelism);
  double unique_ms = millis_since(t1);

  auto t2 = std::chrono::steady_clock::now();
  std::vector<std::string> split_keys;
  if (options.regions > 1 && subjects.size() >= options.regions) {
    split_keys = sample_split_keys(subjects, options.regions, options.sampler,
                                   splits.size());
  } else if (options.regions == 0 || (options.regions & (options.regions - 1)) != 0) {
    throw InvalidArgument("region count must be a power of two");
  } else if (options.regions > 1 && !subjects.empty()) {
    throw InvalidArgument("need at least " + std::to_string(options.regions) +
                          " subjects for " + std::to_string(options.regions) +
                          " regions");
  }
  double sample_ms = millis_since(t2);

  PropertyTable table = PropertyTable::create(split_keys, options.table);
  for (const auto& [label, ns] : prefixes.entries()) table.prefixes().add(label, ns);
  LoadReport report = transform_and_load(splits, table, options.parallelism);
  report.stages.insert(report.stages.begin(),
                       {{"split-input", split_ms},
                        {"unique-subjects", unique_ms},
                        {"sample-split-keys", sample_ms}});
  return {std::move(table), std::move(report)};
}

std::string to_jsonl(const LoadReport& report) {
  using nlohmann::json;
  std::string out;
  json summary = {{"record", "load"},
                  {"triples_read", report.triples_read},
                  {"triples_loaded", report.triples_loaded},
                  {"subjects", report.subjects},
                  {"entries", report.entries},
                  {"regions", report.region_subjects.size()},
                  {"split_keys", report.split_keys},
                  {"warnings", report.warnings.size()}};
  out += summary.dump() + "\n";
  for (std::size_t r = 0; r < report.region_subjects.size(); ++r) {
    out += json{{"record", "region"}, {"region", r},
                {"subjects", report.region_subjects[r]}}.dump() + "\n";
  }
  for (const auto& s : report.stages) {
    out += json{{"record", "stage"}, {"stage", s.name}, {"millis", s.millis}}.dump() +
           "\n";
  }
  for (const auto& w : report.warnings) {
    out += json{{"record", "warning"}, {"message", w}}.dump() + "\n";
  }
  return out;
}

}  // namespace rdfpt::load
