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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rdfpt/plan/planner.h"
#include "rdfpt/sql/sql_generator.h"

namespace rdfpt::exec {

enum class StageKind { kScan, kJoin, kFinalize, kUnion, kDedup, kSort, kFetch };
std::string_view stage_kind_name(StageKind kind);

struct Stage {
  int id = 0;  // Stage-<id>, 1-based
  StageKind kind = StageKind::kScan;
  std::vector<int> inputs;  // stage ids

  // Scan: one view, its pushed selections and a bloom row hint.
  int view = -1;
  std::vector<plan::Condition> sigmas;
  std::optional<std::string> row_key;  // full URI of a pinned subject
  std::set<std::string> expand;        // view columns split into one value per row

  // Join: reduce-side, keyed on the ON equalities.
  plan::JoinKind join = plan::JoinKind::kInner;
  std::vector<plan::Condition> on;

  // Finalize (or a scan with `finalize` set): residual WHERE, then
  // projection onto the root items.
  bool finalize = false;
  std::vector<plan::Condition> residual;
  std::vector<int> branch_views;
  std::vector<std::optional<plan::ColumnRef>> items;

  // Sort: keys index the root items.
  std::optional<std::uint64_t> limit;
};

struct PhysicalPlan {
  plan::LogicalPlan logical;
  std::vector<Stage> stages;  // topological order; the last one is the output
  std::vector<std::string> item_names;
  std::vector<bool> item_hidden;
  std::vector<std::pair<std::size_t, bool>> sort_keys;  // item index, descending
  bool describe = false;
  bool dedup = false;
};

PhysicalPlan compile_physical(const plan::LogicalPlan& logical);
PhysicalPlan compile_physical(const sql::SqlQueryText& sql);

// STAGE DEPENDENCIES / STAGE PLANS listing.
std::string explain_physical(const PhysicalPlan& plan);

}  // namespace rdfpt::exec
