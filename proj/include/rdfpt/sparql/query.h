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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rdfpt/rdf/prefix_table.h"
#include "rdfpt/rdf/term.h"
#include "rdfpt/rdf/value.h"

namespace rdfpt::sparql {

struct TriplePattern {
  rdf::Term subject;
  rdf::Term predicate;
  rdf::Term object;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

enum class FilterKind { kCompare, kRegex, kBound };

// One FILTER. Comparisons are normalized to `?var op constant`.
struct Filter {
  FilterKind kind = FilterKind::kCompare;
  std::string variable;
  rdf::CompareOp op = rdf::CompareOp::kEq;
  rdf::Term constant;     // kCompare
  std::string pattern;    // kRegex
  std::string flags;      // kRegex
  bool negated = false;   // kBound: !bound(?v)

  friend bool operator==(const Filter&, const Filter&) = default;
};

struct GraphPattern {
  std::vector<TriplePattern> patterns;
  std::vector<Filter> filters;
  std::vector<GraphPattern> optionals;
  // `{A} UNION {B} UNION {C}` is stored as (A, {(B, C)}).
  std::vector<std::pair<GraphPattern, GraphPattern>> unions;

  friend bool operator==(const GraphPattern&, const GraphPattern&) = default;
};

enum class QueryForm { kSelect, kDescribe };

struct OrderKey {
  std::string variable;
  bool descending = false;

  friend bool operator==(const OrderKey&, const OrderKey&) = default;
};

struct SparqlQuery {
  QueryForm form = QueryForm::kSelect;
  std::vector<std::string> projection;  // SELECT variables
  bool select_all = false;              // SELECT *; projection is filled in
  bool distinct = false;
  bool reduced = false;
  std::optional<rdf::Term> describe_target;  // variable or uri
  GraphPattern where;
  std::vector<OrderKey> order_by;
  std::optional<std::uint64_t> limit;
  rdf::PrefixTable prefixes;  // as declared by the query

  bool dedup() const { return distinct || reduced; }

  friend bool operator==(const SparqlQuery&, const SparqlQuery&) = default;
};

// Variables of the patterns of `group` and all nested groups, in order of
// first appearance.
std::vector<std::string> pattern_variables(const GraphPattern& group);
void collect_pattern_variables(const GraphPattern& group,
                               std::vector<std::string>& out,
                               std::set<std::string>& seen);

// Variables of one pattern list.
std::set<std::string> variables_of(const std::vector<TriplePattern>& patterns);

}  // namespace rdfpt::sparql
