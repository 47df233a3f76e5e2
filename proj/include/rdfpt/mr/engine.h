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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "rdfpt/error.h"
#include "rdfpt/mr/parallel.h"

namespace rdfpt::mr {

// hash(k) mod R with FNV-1a 64 over the key bytes.
std::size_t default_partition(std::string_view key, std::size_t reducers);

struct JobMetrics {
  std::uint64_t map_input_records = 0;
  std::uint64_t map_output_records = 0;
  std::uint64_t shuffled_records = 0;
  std::uint64_t shuffled_bytes = 0;
  std::uint64_t reduce_groups = 0;
  std::uint64_t output_records = 0;
  // Warnings raised by map/reduce functions, in split (then reducer) order.
  std::vector<std::string> diagnostics;
};

template <class V>
class MapContext {
 public:
  void emit(std::string key, V value) {
    out_.push_back({std::move(key), std::move(value)});
  }
  void warn(std::string message) { diagnostics_.push_back(std::move(message)); }

  std::vector<std::pair<std::string, V>> out_;
  std::vector<std::string> diagnostics_;
};

template <class Out>
class ReduceContext {
 public:
  void emit(Out value) { out_.push_back(std::move(value)); }
  void warn(std::string message) { diagnostics_.push_back(std::move(message)); }

  std::vector<Out> out_;
  std::vector<std::string> diagnostics_;
};

// A single MapReduce job. Keys are byte strings. Without a reduce function
// the job is an identity reduce and Out must be (key, value).
template <class In, class V, class Out = std::pair<std::string, V>>
struct MrJob {
  using MapFn = std::function<void(const In&, MapContext<V>&)>;
  using ReduceFn =
      std::function<void(const std::string&, std::vector<V>&, ReduceContext<Out>&)>;
  using PartitionFn = std::function<std::size_t(const std::string&, std::size_t)>;
  using KeyLess = std::function<bool(const std::string&, const std::string&)>;

  std::string name = "job";
  MapFn map;
  ReduceFn reduce;            // empty: identity
  PartitionFn partitioner;    // empty: default_partition
  std::size_t reducers = 1;
  KeyLess key_less;           // empty: bytewise
  std::function<std::size_t(const V&)> value_bytes;  // for shuffle metrics
};

template <class Out>
struct JobResult {
  std::vector<std::vector<Out>> partitions;  // one per reducer
  JobMetrics metrics;

  std::vector<Out> flatten() const {
    std::vector<Out> all;
    for (const auto& p : partitions) all.insert(all.end(), p.begin(), p.end());
    return all;
  }
};

// Runs map over every split (concurrently, up to `parallelism` workers),
// partitions intermediate pairs, sorts each reducer's input by key with a
// stable (split, emit order) tiebreak and reduces each key group. The
// result does not depend on `parallelism`.
template <class In, class V, class Out>
JobResult<Out> run_job(const MrJob<In, V, Out>& job,
                       const std::vector<std::vector<In>>& splits,
                       std::size_t parallelism) {
  if (job.reducers == 0) throw InvalidArgument(job.name + ": R must be >= 1");
  if (!job.map) throw InvalidArgument(job.name + ": missing map function");
  constexpr bool kIdentityOk = std::is_same_v<Out, std::pair<std::string, V>>;
  if (!job.reduce && !kIdentityOk) {
    throw InvalidArgument(job.name + ": identity reduce needs (key, value) output");
  }

  struct Record {
    std::string key;
    V value;
  };
  struct SplitOutput {
    std::vector<std::vector<Record>> by_reducer;
    std::vector<std::string> diagnostics;
    std::uint64_t input = 0;
  };

  const std::size_t R = job.reducers;
  std::vector<SplitOutput> mapped(splits.size());
  parallel_for(splits.size(), parallelism, [&](std::size_t s) {
      try {
        MapContext<V> ctx;
        for (const In& record : splits[s]) job.map(record, ctx);
        SplitOutput& out = mapped[s];
        out.input = splits[s].size();
        out.by_reducer.resize(R);
        for (auto& [k, v] : ctx.out_) {
          std::size_t r = job.partitioner ? job.partitioner(k, R)
                                          : default_partition(k, R);
          if (r >= R) throw InvalidArgument("partitioner returned out-of-range reducer");
          out.by_reducer[r].push_back({std::move(k), std::move(v)});
        }
        out.diagnostics = std::move(ctx.diagnostics_);
      } catch (const std::exception& e) {
        throw JobFailure(job.name + ": map task for split " + std::to_string(s) +
                             " failed: " + e.what(),
                         static_cast<int>(s), std::current_exception());
      }
  });

  JobResult<Out> result;
  result.partitions.resize(R);
  for (const auto& m : mapped) {
    result.metrics.map_input_records += m.input;
    result.metrics.diagnostics.insert(result.metrics.diagnostics.end(),
                                      m.diagnostics.begin(), m.diagnostics.end());
    for (const auto& bucket : m.by_reducer) {
      result.metrics.map_output_records += bucket.size();
      for (const auto& rec : bucket) {
        result.metrics.shuffled_bytes +=
            rec.key.size() + (job.value_bytes ? job.value_bytes(rec.value) : 0);
      }
    }
  }
  result.metrics.shuffled_records = result.metrics.map_output_records;

  auto less = [&](const std::string& a, const std::string& b) {
    return job.key_less ? job.key_less(a, b) : a < b;
  };
  std::vector<std::uint64_t> groups(R, 0);
  std::vector<std::vector<std::string>> reduce_diag(R);
  parallel_for(R, parallelism, [&](std::size_t r) {
    std::vector<Record> input;
    for (auto& m : mapped) {
      auto& bucket = m.by_reducer[r];
      std::move(bucket.begin(), bucket.end(), std::back_inserter(input));
      bucket.clear();
    }
    // Concatenation is already in (split, emit) order, so a stable sort
    // yields the documented tiebreak.
    std::stable_sort(input.begin(), input.end(),
                     [&](const Record& a, const Record& b) {
                       return less(a.key, b.key);
                     });
    ReduceContext<Out> ctx;
    std::size_t i = 0;
    try {
      while (i < input.size()) {
        std::size_t j = i + 1;
        while (j < input.size() && !less(input[i].key, input[j].key)) ++j;
        ++groups[r];
        if (job.reduce) {
          std::vector<V> values;
          values.reserve(j - i);
          for (std::size_t k = i; k < j; ++k) values.push_back(std::move(input[k].value));
          job.reduce(input[i].key, values, ctx);
        } else if constexpr (kIdentityOk) {
          for (std::size_t k = i; k < j; ++k) {
            ctx.emit({input[k].key, std::move(input[k].value)});
          }
        }
        i = j;
      }
    } catch (const std::exception& e) {
      throw JobFailure(job.name + ": reduce task " + std::to_string(r) +
                           " failed: " + e.what(),
                       static_cast<int>(r), std::current_exception());
    }
    result.partitions[r] = std::move(ctx.out_);
    reduce_diag[r] = std::move(ctx.diagnostics_);
  });
  for (std::size_t r = 0; r < R; ++r) {
    result.metrics.reduce_groups += groups[r];
    result.metrics.output_records += result.partitions[r].size();
    result.metrics.diagnostics.insert(result.metrics.diagnostics.end(),
                                      reduce_diag[r].begin(), reduce_diag[r].end());
  }
  return result;
}

// A map-only stage: no shuffle, outputs kept per split in split order.
template <class In, class Out>
std::vector<std::vector<Out>> run_map_only(
    const std::string& name, const std::vector<std::vector<In>>& splits,
    std::size_t parallelism,
    const std::function<void(const In&, std::vector<Out>&)>& map) {
  std::vector<std::vector<Out>> out(splits.size());
  parallel_for(splits.size(), parallelism, [&](std::size_t s) {
    try {
      for (const In& record : splits[s]) map(record, out[s]);
    } catch (const std::exception& e) {
      throw JobFailure(name + ": map task for split " + std::to_string(s) +
                           " failed: " + e.what(),
                       static_cast<int>(s), std::current_exception());
    }
  });
  return out;
}

}  // namespace rdfpt::mr
