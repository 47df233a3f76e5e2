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

#include "rdfpt/exec/result.h"
#include "rdfpt/oracle/triple_table.h"
#include "rdfpt/sparql/query.h"

namespace rdfpt::testing {

// A second reference evaluator for cross-checking the oracle. It walks each
// union-free alternative top-down, extending one binding at a time with a
// nested loop over all triples, and applies the same FILTER, DISTINCT,
// ORDER BY, LIMIT and DESCRIBE rules.
exec::ResultSet nested_loop_eval(const sparql::SparqlQuery& query,
                                 const oracle::TripleTable& table);

}  // namespace rdfpt::testing
