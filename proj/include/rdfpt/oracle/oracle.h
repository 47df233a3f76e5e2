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

#include "rdfpt/exec/result.h"
#include "rdfpt/oracle/triple_table.h"
#include "rdfpt/sparql/query.h"

namespace rdfpt::oracle {

struct OracleStats {
  std::uint64_t patterns = 0;    // triple patterns matched against the table
  std::uint64_t self_joins = 0;  // joins between pattern results
};

// Reference evaluation over the triple table: every pattern is matched by
// a full pass, pattern results are joined one at a time, OPTIONALs are left
// joins, FILTERs run last. Throws the same UnsupportedFeature errors as the
// planner.
exec::ResultSet oracle_eval(const sparql::SparqlQuery& query, const TripleTable& table,
                            OracleStats* stats = nullptr);

// Distinct subjects (plus a DESCRIBE target that is not one) minus one,
// summed over UNION alternatives.
std::size_t oracle_join_count(const sparql::SparqlQuery& query);

}  // namespace rdfpt::oracle
