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

#include "rdfpt/oracle/word_count.h"

#include <sstream>

namespace rdfpt::oracle {

std::map<std::string, std::uint64_t> word_count(const std::vector<std::string>& documents,
                                                std::size_t parallelism, std::size_t reducers,
                                                mr::JobMetrics* metrics) {
  mr::MrJob<std::string, std::uint64_t, std::pair<std::string, std::uint64_t>> job;
  job.name = "word count";
  job.reducers = reducers;
  job.map = [](const std::string& doc, mr::MapContext<std::uint64_t>& ctx) {
    std::istringstream in(doc);
    std::string w;
    while (in >> w) ctx.emit(w, 1);
  };
  job.reduce = [](const std::string& word, std::vector<std::uint64_t>& counts,
                  mr::ReduceContext<std::pair<std::string, std::uint64_t>>& ctx) {
    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;
    ctx.emit({word, sum});
  };
  std::vector<std::vector<std::string>> splits;
  for (const auto& d : documents) splits.push_back({d});
  auto result = mr::run_job(job, splits, parallelism);
  if (metrics) *metrics = result.metrics;
  std::map<std::string, std::uint64_t> out;
  for (const auto& [w, n] : result.flatten()) out[w] = n;
  return out;
}

}  // namespace rdfpt::oracle
