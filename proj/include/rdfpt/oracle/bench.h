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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdfpt/exec/executor.h"
#include "rdfpt/storage/property_table.h"

namespace rdfpt::oracle {

double arithmetic_mean(const std::vector<double>& samples);
// exp(mean(log x)); InvalidArgument for a non-positive sample.
double geometric_mean(const std::vector<double>& samples);

struct BenchQueryReport {
  std::string name;
  std::vector<double> times_ms;
  double arithmetic_mean_ms = 0;
  double geometric_mean_ms = 0;
  std::size_t rows = 0;
  std::size_t joins = 0;
  exec::ExecMetrics metrics;         // last repetition
  std::optional<std::string> error;  // the query failed; the run went on
};

struct BenchReport {
  std::vector<BenchQueryReport> queries;
  std::string to_jsonl() const;
};

// Runs each (name, SPARQL text) `repetitions` times.
BenchReport bench(const storage::PropertyTable& table,
                  const std::vector<std::pair<std::string, std::string>>& queries,
                  std::size_t repetitions, const exec::ExecOptions& options = {});

}  // namespace rdfpt::oracle
