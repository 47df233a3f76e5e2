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

#include "rdfpt/oracle/degree_histogram.h"

#include "rdfpt/mr/engine.h"

namespace rdfpt::oracle {

std::map<std::uint64_t, std::uint64_t> degree_histogram(const storage::PropertyTable& table,
                                                        std::size_t parallelism) {
  using Count = std::pair<std::string, std::uint64_t>;
  std::vector<std::vector<std::size_t>> regions;
  for (std::size_t r = 0; r < table.region_count(); ++r) regions.push_back({r});

  mr::MrJob<std::size_t, std::uint64_t, Count> per_subject;
  per_subject.name = "objects per subject";
  per_subject.reducers = 4;
  per_subject.map = [&](const std::size_t& region, mr::MapContext<std::uint64_t>& ctx) {
    table.scan_region(region, {}, std::nullopt, [&](storage::Row&& row) {
      for (const auto& [col, values] : row.cells) {
        for (std::size_t i = 0; i < values.size(); ++i) ctx.emit(row.key, 1);
      }
    });
  };
  per_subject.reduce = [](const std::string& subject, std::vector<std::uint64_t>& ones,
                          mr::ReduceContext<Count>& ctx) {
    std::uint64_t n = 0;
    for (auto v : ones) n += v;
    ctx.emit({subject, n});
  };
  auto degrees = mr::run_job(per_subject, regions, parallelism);

  mr::MrJob<Count, std::uint64_t, Count> per_degree;
  per_degree.name = "subjects per degree";
  per_degree.reducers = 1;
  per_degree.map = [](const Count& c, mr::MapContext<std::uint64_t>& ctx) {
    ctx.emit(std::to_string(c.second), 1);
  };
  per_degree.reduce = [](const std::string& degree, std::vector<std::uint64_t>& ones,
                         mr::ReduceContext<Count>& ctx) {
    std::uint64_t n = 0;
    for (auto v : ones) n += v;
    ctx.emit({degree, n});
  };
  auto freq = mr::run_job(per_degree, degrees.partitions, parallelism);
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& [d, n] : freq.flatten()) out[std::stoull(d)] = n;
  return out;
}

}  // namespace rdfpt::oracle
