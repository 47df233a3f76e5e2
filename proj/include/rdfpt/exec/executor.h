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

#include <cstddef>

#include "rdfpt/exec/physical_plan.h"
#include "rdfpt/exec/result.h"
#include "rdfpt/storage/property_table.h"

namespace rdfpt::exec {

inline constexpr std::size_t kJoinReducers = 4;

struct ExecOptions {
  std::size_t parallelism = 1;
  std::size_t reducers = kJoinReducers;
};

struct ExecResult {
  ResultSet result;
  ExecMetrics metrics;
};

// Runs every stage as a map-only or MapReduce job over the table's regions.
// The output does not depend on options.parallelism.
ExecResult execute(const storage::PropertyTable& table, const PhysicalPlan& plan,
                   const ExecOptions& options = {});

}  // namespace rdfpt::exec
