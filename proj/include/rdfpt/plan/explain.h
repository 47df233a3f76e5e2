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

#include <string>

#include "rdfpt/plan/planner.h"

namespace rdfpt::plan {

// Subject map, views, join edges and the operator tree, one item per line.
std::string explain(const QueryPlan& plan);

// Just the tree, indented two spaces per level.
std::string ast_text(const QueryPlan& plan, const AstNode& node);

}  // namespace rdfpt::plan
