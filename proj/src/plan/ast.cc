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

#include "rdfpt/plan/ast.h"

namespace rdfpt::plan {

std::set<int> Condition::views() const {
  std::set<int> v{left.view};
  if (right_column) v.insert(right_column->view);
  return v;
}

AstPtr AstNode::relation(int view) {
  auto n = std::make_shared<AstNode>();
  n->kind = NodeKind::kRelation;
  n->view = view;
  return n;
}

AstPtr AstNode::select(Condition c, AstPtr child) {
  auto n = std::make_shared<AstNode>();
  n->kind = NodeKind::kSelect;
  n->conditions.push_back(std::move(c));
  n->children.push_back(std::move(child));
  return n;
}

AstPtr AstNode::join_of(JoinKind kind, AstPtr left, AstPtr right,
                        std::vector<Condition> conditions) {
  auto n = std::make_shared<AstNode>();
  n->kind = NodeKind::kJoin;
  n->join = kind;
  n->conditions = std::move(conditions);
  n->children.push_back(std::move(left));
  n->children.push_back(std::move(right));
  return n;
}

AstPtr AstNode::project(std::vector<ProjectItem> items, AstPtr child) {
  auto n = std::make_shared<AstNode>();
  n->kind = NodeKind::kProject;
  n->items = std::move(items);
  n->children.push_back(std::move(child));
  return n;
}

AstPtr AstNode::unite(std::vector<AstPtr> children) {
  auto n = std::make_shared<AstNode>();
  n->kind = NodeKind::kUnion;
  n->children = std::move(children);
  return n;
}

AstPtr AstNode::dedup(AstPtr child) {
  auto n = std::make_shared<AstNode>();
  n->kind = NodeKind::kDedup;
  n->children.push_back(std::move(child));
  return n;
}

AstPtr AstNode::sort(std::vector<SortKey> keys, AstPtr child) {
  auto n = std::make_shared<AstNode>();
  n->kind = NodeKind::kSort;
  n->keys = std::move(keys);
  n->children.push_back(std::move(child));
  return n;
}

bool AstNode::is_pushed_select() const {
  const AstNode* n = this;
  while (n->kind == NodeKind::kSelect) n = n->children[0].get();
  return n->kind == NodeKind::kRelation;
}

bool structurally_equal(const AstNode& a, const AstNode& b) {
  if (a.kind != b.kind || a.view != b.view || a.conditions != b.conditions ||
      a.join != b.join || a.items != b.items || a.describe != b.describe ||
      a.keys != b.keys || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!structurally_equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

int leftmost_view(const AstNode& node) {
  const AstNode* n = &node;
  while (n->kind != NodeKind::kRelation) n = n->children.front().get();
  return n->view;
}

namespace {
void collect_relations(const AstNode& n, std::vector<int>& out) {
  if (n.kind == NodeKind::kRelation) {
    out.push_back(n.view);
    return;
  }
  for (const auto& c : n.children) collect_relations(*c, out);
}
}  // namespace

std::vector<int> relations(const AstNode& node) {
  std::vector<int> out;
  collect_relations(node, out);
  return out;
}

std::size_t count_nodes(const AstNode& node, NodeKind kind) {
  std::size_t n = node.kind == kind ? 1 : 0;
  for (const auto& c : node.children) n += count_nodes(*c, kind);
  return n;
}

}  // namespace rdfpt::plan
