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

#include "rdfpt/exec/result.h"
#include "rdfpt/sparql/query.h"

namespace rdfpt::oracle {

struct Comparison {
  bool equal = true;
  std::string detail;  // first difference found
};

// Multiset equality on rendered rows. With ORDER BY the sort-key sequences
// must match too. Under LIMIT, rows may differ only among ties at the cut
// (or anywhere without ORDER BY); when the unlimited reference result is
// given, both sides must be drawn from it.
Comparison compare_results(const exec::ResultSet& actual, const exec::ResultSet& expected,
                           const sparql::SparqlQuery& query,
                           const exec::ResultSet* expected_unlimited = nullptr);

}  // namespace rdfpt::oracle
