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

#include "rdfpt/plan/planner.h"
#include "rdfpt/sql/sql_generator.h"

namespace rdfpt::sql {

// Reads a generated statement back into an operator tree. Join nesting is
// recovered from the view scopes in the side table; a condition on a single
// view inside ON is a selection applied before the join.
plan::LogicalPlan parse_sql(const SqlQueryText& sql);

}  // namespace rdfpt::sql
