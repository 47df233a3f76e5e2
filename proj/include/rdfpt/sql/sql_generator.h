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
#include <vector>

#include "rdfpt/plan/planner.h"
#include "rdfpt/rdf/prefix_table.h"

namespace rdfpt::sql {

// Facts about one WHERE conjunct that the text alone does not carry.
struct WhereNote {
  std::optional<plan::ColumnRef> guard;  // OPTIONAL FILTER: applies iff not NULL
  bool regex = false;                    // emitted as LIKE
  bool residual = false;                 // LIKE only approximates the regex
  std::string pattern;                   // original regex
  std::string flags;
};

// What the executor needs besides the statement: view name -> definition,
// scopes, folds and WHERE notes (one per conjunct, in text order).
struct SideTable {
  std::vector<plan::ViewDef> views;
  std::vector<plan::ScopeInfo> scopes;
  std::vector<plan::FoldGroup> folds;
  std::vector<std::string> output_names;
  std::vector<std::string> describe_columns;
  // Root projection names in SELECT order, sort-only names last.
  std::vector<std::string> item_names;
  rdf::PrefixTable query_prefixes;
  rdf::PrefixTable catalog_prefixes;
  std::vector<WhereNote> where;
};

struct SqlQueryText {
  std::string text;
  SideTable side;
};

SqlQueryText generate_sql(const plan::QueryPlan& plan);

// Text of one condition / constant as it appears in the statement.
std::string condition_sql(const plan::QueryPlan& plan, const plan::Condition& c);
std::string constant_sql(const plan::QueryPlan& plan, const rdf::Value& v);

// Collapses whitespace runs to one space and trims; used by golden tests.
std::string normalize_whitespace(const std::string& text);

}  // namespace rdfpt::sql
