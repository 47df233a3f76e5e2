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

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rdfpt/rdf/value.h"

namespace rdfpt::plan {

inline constexpr std::string_view kKeyColumn = "key";

enum class JoinKind { kInner, kLeftOuter };

// A column of a view: `view` indexes QueryPlan::views, `column` is "key" or
// one of the view's column names.
struct ColumnRef {
  int view = -1;
  std::string column;

  bool is_key() const { return column == kKeyColumn; }
  friend auto operator<=>(const ColumnRef&, const ColumnRef&) = default;
  friend bool operator==(const ColumnRef&, const ColumnRef&) = default;
};

enum class CondKind {
  kCompare,   // left op constant
  kColumnEq,  // left = right_column
  kRegex,     // regex(left, pattern, flags)
  kBound,     // left IS NOT NULL
  kNotBound,  // left IS NULL
};

struct Condition {
  CondKind kind = CondKind::kCompare;
  ColumnRef left;
  rdf::CompareOp op = rdf::CompareOp::kEq;
  std::optional<ColumnRef> right_column;
  std::optional<rdf::Value> constant;
  std::string pattern;
  std::string flags;
  // FILTERs written inside an OPTIONAL only apply to rows where that
  // OPTIONAL matched, i.e. where this column is not NULL.
  std::optional<ColumnRef> guard;

  bool is_equality() const {
    return kind == CondKind::kColumnEq ||
           (kind == CondKind::kCompare && op == rdf::CompareOp::kEq);
  }
  std::set<int> views() const;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct ProjectItem {
  std::string name;                 // output variable name
  std::optional<ColumnRef> column;  // empty: NULL, or by name over a Union
  bool hidden = false;              // carried only for sorting

  friend bool operator==(const ProjectItem&, const ProjectItem&) = default;
};

struct SortKey {
  std::string name;  // a project item
  bool descending = false;

  friend bool operator==(const SortKey&, const SortKey&) = default;
};

enum class NodeKind { kRelation, kSelect, kJoin, kProject, kUnion, kDedup, kSort };

struct AstNode;
using AstPtr = std::shared_ptr<AstNode>;

struct AstNode {
  NodeKind kind = NodeKind::kRelation;
  int view = -1;                      // kRelation
  std::vector<Condition> conditions;  // kSelect: exactly one; kJoin: ON list
  JoinKind join = JoinKind::kInner;   // kJoin
  std::vector<ProjectItem> items;     // kProject
  bool describe = false;              // kProject: DESCRIBE output
  std::vector<SortKey> keys;          // kSort
  std::vector<AstPtr> children;

  static AstPtr relation(int view);
  static AstPtr select(Condition c, AstPtr child);
  static AstPtr join_of(JoinKind kind, AstPtr left, AstPtr right,
                        std::vector<Condition> conditions);
  static AstPtr project(std::vector<ProjectItem> items, AstPtr child);
  static AstPtr unite(std::vector<AstPtr> children);
  static AstPtr dedup(AstPtr child);
  static AstPtr sort(std::vector<SortKey> keys, AstPtr child);

  // Selects directly above a Relation chain.
  bool is_pushed_select() const;
};

bool structurally_equal(const AstNode& a, const AstNode& b);

// Leftmost relation below `node`.
int leftmost_view(const AstNode& node);
// Relations below `node`, left to right.
std::vector<int> relations(const AstNode& node);
std::size_t count_nodes(const AstNode& node, NodeKind kind);

}  // namespace rdfpt::plan
