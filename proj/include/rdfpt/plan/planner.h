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

#include "rdfpt/plan/ast.h"
#include "rdfpt/rdf/prefix_table.h"
#include "rdfpt/rdf/type_map.h"
#include "rdfpt/sparql/branches.h"
#include "rdfpt/sparql/query.h"

namespace rdfpt::plan {

// What the planner needs to know about the stored table.
struct Catalog {
  rdf::PrefixTable prefixes;       // storage compaction
  rdf::PredicateTypeMap types;     // storage column -> type
  std::set<std::string> columns;   // storage column universe
};

// A triple pattern together with the scope it was written in.
struct PatternRef {
  int scope = 0;  // local scope id in the branch
  int order = 0;  // position in pre-order over the branch
  sparql::TriplePattern pattern;
};

// Name of a join point: "?var" for variables, "<uri" for constant URIs
// used as subjects.
std::string term_name(const rdf::Term& term);

struct SubjectEntry {
  rdf::Term subject;
  std::string name;
  std::vector<PatternRef> patterns;
  int home_scope = 0;  // shallowest scope where it is a subject
};

// M: subjects in order of first appearance with their patterns.
struct SubjectTripleMap {
  std::vector<SubjectEntry> entries;
  std::map<std::string, int> index;

  const SubjectEntry* find(const std::string& name) const;
  std::set<std::string> key_set() const;
};

SubjectTripleMap build_subject_map(const sparql::Branch& branch);

struct ViewColumn {
  std::string name;       // storage name, "#k" suffixed for repeats
  std::string storage;    // storage column read by the scan
  std::string predicate;  // full predicate URI
  std::string display;    // "label:local" or "<uri>"
  rdf::ValueKind type = rdf::ValueKind::kString;
  bool multi = true;      // cells may hold several values
  int scope = -1;         // global scope of the defining pattern
  int fold = -1;          // fold group, or -1
};

// Ri: the columns one subject needs, in one scope. Views carry no data.
struct ViewDef {
  std::string name;
  rdf::Term subject;
  int branch = 0;
  int scope = -1;        // global home scope
  bool fragment = false; // subject's patterns of a non-home scope
  std::vector<ViewColumn> columns;

  const ViewColumn* column(const std::string& name) const;
};

// An OPTIONAL whose patterns are all fresh-object patterns of the subject
// of a view in the enclosing group. It is read from that view's row; it
// matches when all of its columns are non-empty.
struct FoldGroup {
  int view = -1;
  int scope = -1;   // global scope id
  int parent = -1;  // enclosing fold group, or -1
  std::vector<std::string> columns;
};

struct ScopeInfo {
  int branch = 0;
  int local = 0;
  int parent = -1;  // global id
  int fold = -1;    // fold group when the scope is folded
  std::optional<ColumnRef> guard;  // not NULL iff the scope matched
};

// S-O join between two views, merged over all connecting patterns.
struct JoinEdge {
  int left_view = -1;
  std::vector<std::string> left_columns;
  int right_view = -1;  // joined on its key
  JoinKind kind = JoinKind::kInner;
};

struct BranchPlan {
  sparql::Branch branch;
  SubjectTripleMap subjects;
  std::vector<int> views;        // global view indexes
  std::vector<int> scope_ids;    // local -> global scope id
  std::vector<JoinEdge> joins;
  std::map<std::string, ColumnRef> bindings;
  AstPtr tree;                   // join tree with its selects
  // Pattern order -> the view column holding its object (subject
  // occurrences always map to that view's key).
  std::map<int, ColumnRef> pattern_columns;
  // Zero-pattern views (a DESCRIBE target that is never a subject).
  std::vector<std::pair<std::string, int>> bare_views;
};

// Everything execution needs: view mappings plus the operator tree.
struct LogicalPlan {
  std::vector<ViewDef> views;
  std::vector<ScopeInfo> scopes;
  std::vector<FoldGroup> folds;
  std::vector<std::string> output_names;
  std::vector<std::string> describe_columns;
  AstPtr root;
  std::optional<std::uint64_t> limit;
};

struct QueryPlan {
  sparql::SparqlQuery query;
  Catalog catalog;
  std::vector<ViewDef> views;
  std::vector<ScopeInfo> scopes;
  std::vector<FoldGroup> folds;
  std::vector<BranchPlan> branches;
  AstPtr root;
  std::vector<std::string> output_names;  // result header
  // DESCRIBE: storage columns to fetch, ordered by full predicate URI.
  std::vector<std::string> describe_columns;

  bool describe() const { return query.form == sparql::QueryForm::kDescribe; }
  LogicalPlan logical() const;
  std::size_t join_count() const;
  // "label:local" / "<uri>" for a full URI, query prefixes first.
  std::string display_uri(const std::string& full) const;
  std::string column_text(const ColumnRef& ref) const;
};

// View construction for one branch. Appends to plan.views / folds / scopes
// and fills the branch's view list and scope ids.
void make_views(QueryPlan& plan, BranchPlan& branch);

// One edge per connected view pair: a pattern whose object is a subject of
// M and whose subject is another view's subject. Crossing into an
// OPTIONAL makes the edge left-outer.
std::vector<JoinEdge> detect_joins(const QueryPlan& plan, const BranchPlan& branch);

// variable -> its column in the shallowest scope that mentions it.
std::map<std::string, ColumnRef> bind_variables(const QueryPlan& plan,
                                                const BranchPlan& branch);

// Builds the branch join trees and the root operators.
void build_ast(QueryPlan& plan);

// The full pipeline: check, expand unions, views, joins, bindings, AST.
QueryPlan plan_query(const sparql::SparqlQuery& query, const Catalog& catalog);

// Number of joins the query needs (sum over UNION alternatives).
std::size_t count_joins(const sparql::SparqlQuery& query, const Catalog& catalog = {});

}  // namespace rdfpt::plan
