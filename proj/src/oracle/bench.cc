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

#include "rdfpt/oracle/bench.h"

#include <chrono>
#include <cmath>

#include "json.hpp"
#include "rdfpt/error.h"
#include "rdfpt/oracle/database.h"

namespace rdfpt::oracle {

double arithmetic_mean(const std::vector<double>& samples) {
  if (samples.empty()) return 0;
  double sum = 0;
  for (double s : samples) sum += s;
  return sum / static_cast<double>(samples.size());
}

double geometric_mean(const std::vector<double>& samples) {
  if (samples.empty()) return 0;
  double logs = 0;
  for (double s : samples) {
    if (!(s > 0)) throw InvalidArgument("geometric mean needs positive samples");
    logs += std::log(s);
  }
  return std::exp(logs / static_cast<double>(samples.size()));
}

BenchReport bench(const storage::PropertyTable& table,
                  const std::vector<std::pair<std::string, std::string>>& queries,
                  std::size_t repetitions, const exec::ExecOptions& options) {
  BenchReport report;
  for (const auto& [name, text] : queries) {
    BenchQueryReport q;
    q.name = name;
    try {
      for (std::size_t r = 0; r < repetitions; ++r) {
        auto start = std::chrono::steady_clock::now();
        QueryRun run = run_query(table, text, options);
        auto end = std::chrono::steady_clock::now();
        // Clamp to 1 µs so the geometric mean stays defined.
        double ms = std::max(std::chrono::duration<double, std::milli>(end - start).count(), 1e-3);
        q.times_ms.push_back(ms);
        q.rows = run.exec.result.rows.size();
        q.joins = run.plan.join_count();
        q.metrics = std::move(run.exec.metrics);
      }
      q.arithmetic_mean_ms = arithmetic_mean(q.times_ms);
      q.geometric_mean_ms = geometric_mean(q.times_ms);
    } catch (const std::exception& e) {
      q.error = e.what();
    }
    report.queries.push_back(std::move(q));
  }
  return report;
}

std::string BenchReport::to_jsonl() const {
  std::string out;
  std::vector<double> arith, geo;
  for (const auto& q : queries) {
    nlohmann::ordered_json j;
    j["type"] = "query";
    j["name"] = q.name;
    j["times_ms"] = q.times_ms;
    j["arithmetic_mean_ms"] = q.arithmetic_mean_ms;
    j["geometric_mean_ms"] = q.geometric_mean_ms;
    j["rows"] = q.rows;
    j["joins"] = q.joins;
    auto t = q.metrics.totals();
    j["shuffled_records"] = t.shuffled_records;
    j["blocks_read"] = t.blocks_read;
    j["blocks_skipped"] = t.blocks_skipped;
    j["stages"] = q.metrics.stages.size();
    if (q.error) {
      j["error"] = *q.error;
    } else {
      arith.push_back(q.arithmetic_mean_ms);
      geo.push_back(q.geometric_mean_ms);
    }
    out += j.dump() + "\n";
  }
  nlohmann::ordered_json s;
  s["type"] = "summary";
  s["queries"] = queries.size();
  s["failed"] = queries.size() - arith.size();
  s["arithmetic_mean_ms"] = arithmetic_mean(arith);
  s["geometric_mean_ms"] = geo.empty() ? 0.0 : geometric_mean(geo);
  out += s.dump() + "\n";
  return out;
}

}  // namespace rdfpt::oracle
