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

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fixtures.h"
#include "random_corpus.h"
#include "rdfpt/error.h"
#include "rdfpt/oracle/database.h"
#include "rdfpt/oracle/oracle.h"
#include "rdfpt/plan/explain.h"
#include "rdfpt/plan/planner.h"
#include "rdfpt/sparql/branches.h"
#include "rdfpt/sparql/parser.h"

namespace rdfpt::plan {
namespace {

using testing::data_path;
using testing::read_file;

const Catalog& people_catalog() {
  static const Catalog c = [] {
    auto l = testing::load_text(read_file(data_path("join/people.nt")),
                                testing::read_prefixes(data_path("join/prefixes.tsv")));
    return oracle::catalog_of(l.table);
  }();
  return c;
}

QueryPlan plan_file(const std::string& rel, const Catalog& catalog = {}) {
  return plan_query(sparql::parse_sparql(read_file(data_path(rel))), catalog);
}

QueryPlan plan_text(const std::string& text, const Catalog& catalog = {}) {
  return plan_query(sparql::parse_sparql(text), catalog);
}

std::set<std::string> column_names(const ViewDef& v) {
  std::set<std::string> out = {std::string(kKeyColumn)};
  for (const auto& c : v.columns) out.insert(c.name);
  return out;
}

TEST(SubjectMap, JoinQuery) {
  auto p = plan_file("join/join_query.rq", people_catalog());
  ASSERT_EQ(p.branches.size(), 1u);
  const auto& m = p.branches[0].subjects;
  EXPECT_EQ(m.key_set(), (std::set<std::string>{"?x", "?country"}));
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0].name, "?x");
  EXPECT_EQ(m.entries[0].patterns.size(), 4u);
  EXPECT_EQ(m.entries[1].patterns.size(), 1u);
}

TEST(SubjectMap, SinglePattern) {
  auto p = plan_text("SELECT ?o WHERE { ?s <http://x/p> ?o }");
  EXPECT_EQ(p.branches[0].subjects.entries.size(), 1u);
  EXPECT_TRUE(p.branches[0].joins.empty());
  ASSERT_EQ(p.views.size(), 1u);
  EXPECT_EQ(column_names(p.views[0]).size(), 2u);
}

TEST(SubjectMap, NestedOptionalQuery) {
  auto p = plan_file("bsbm/q7.rq");
  const auto& m = p.branches[0].subjects;
  ASSERT_EQ(m.entries.size(), 5u);
  EXPECT_TRUE(m.entries[0].subject.is_uri());
  std::vector<std::string> names;
  for (std::size_t i = 1; i < m.entries.size(); ++i) names.push_back(m.entries[i].name);
  EXPECT_EQ(names, (std::vector<std::string>{"?offer", "?vendor", "?review", "?reviewer"}));
  std::vector<std::string> views;
  for (const auto& v : p.views) views.push_back(v.name);
  EXPECT_EQ(views, (std::vector<std::string>{"R1", "R2", "R3", "R4", "R5"}));
}

TEST(SubjectMap, VariablePredicateRejected) {
  EXPECT_THROW(plan_text("SELECT ?s WHERE { ?s ?p ?o }"), UnsupportedFeature);
}

TEST(Joins, JoinQueryEdge) {
  auto p = plan_file("join/join_query.rq", people_catalog());
  const auto& joins = p.branches[0].joins;
  ASSERT_EQ(joins.size(), 1u);
  EXPECT_EQ(p.views[joins[0].left_view].name, "R1");
  EXPECT_EQ(joins[0].left_columns, (std::vector<std::string>{"foaf_livesIn"}));
  EXPECT_EQ(p.views[joins[0].right_view].name, "R2");
  EXPECT_EQ(joins[0].kind, JoinKind::kInner);
}

TEST(Joins, BenchmarkEdgeCounts) {
  EXPECT_EQ(plan_file("bsbm/q2.rq").join_count(), 2u);
  EXPECT_EQ(plan_file("bsbm/q5.rq").join_count(), 1u);
  auto q7 = plan_file("bsbm/q7.rq");
  EXPECT_EQ(q7.join_count(), 4u);
  // Entering either OPTIONAL is left-outer; edges inside one are inner.
  std::map<std::pair<std::string, std::string>, JoinKind> kinds;
  for (const auto& e : q7.branches[0].joins) {
    kinds[{q7.views[e.left_view].name, q7.views[e.right_view].name}] = e.kind;
  }
  EXPECT_EQ(kinds.size(), 4u);
  using Edge = std::pair<std::string, std::string>;
  EXPECT_EQ(kinds[Edge("R2", "R3")], JoinKind::kInner);
  EXPECT_EQ(kinds[Edge("R4", "R5")], JoinKind::kInner);
  EXPECT_EQ(kinds[Edge("R2", "R1")], JoinKind::kLeftOuter);
  EXPECT_EQ(kinds[Edge("R4", "R1")], JoinKind::kLeftOuter);
}

TEST(Views, JoinQueryColumns) {
  auto p = plan_file("join/join_query.rq", people_catalog());
  EXPECT_EQ(column_names(p.views[0]),
            (std::set<std::string>{"key", "foaf_firstName", "foaf_age", "rdf_type",
                                   "foaf_livesIn"}));
  EXPECT_EQ(p.views[0].column("foaf_age")->type, rdf::ValueKind::kInteger);
  EXPECT_EQ(p.views[0].column("foaf_firstName")->type, rdf::ValueKind::kString);
  EXPECT_EQ(column_names(p.views[1]), (std::set<std::string>{"key", "foaf_population"}));
}

TEST(Bindings, ObjectAndSubjectVariables) {
  auto p = plan_file("join/join_query.rq", people_catalog());
  const auto& b = p.branches[0].bindings;
  EXPECT_EQ(p.column_text(b.at("firstName")), "R1.foaf:firstName");
  EXPECT_EQ(b.at("firstName").column, "foaf_firstName");
  EXPECT_EQ(p.views[b.at("country").view].name, "R2");
  EXPECT_TRUE(b.at("country").is_key());
  EXPECT_TRUE(b.at("x").is_key());
}

TEST(Bindings, OrderOnlyVariableIsAnError) {
  EXPECT_THROW(plan_text("SELECT ?s WHERE { ?s <http://x/p> ?o } ORDER BY ?nowhere"), Error);
}

TEST(Ast, JoinQueryShape) {
  auto p = plan_file("join/join_query.rq", people_catalog());
  const AstNode& root = *p.root;
  ASSERT_EQ(root.kind, NodeKind::kProject);
  const AstNode& join = *root.children.at(0);
  ASSERT_EQ(join.kind, NodeKind::kJoin);
  ASSERT_EQ(join.conditions.size(), 1u);
  EXPECT_EQ(join.conditions[0].kind, CondKind::kColumnEq);
  const AstNode& left = *join.children.at(0);
  ASSERT_EQ(left.kind, NodeKind::kSelect);
  EXPECT_EQ(left.conditions[0].constant->lexical,
            "http://www.w3.org/1999/02/22-rdf-syntax-ns#Person");
  EXPECT_EQ(left.children.at(0)->kind, NodeKind::kRelation);
  EXPECT_EQ(join.children.at(1)->kind, NodeKind::kRelation);
}

TEST(Ast, SingleViewFilterStaysBelowProject) {
  auto p = plan_file("join/self_join_query.rq");
  auto q = plan_text(
      "PREFIX foaf: <http://xmlns.com/foaf/0.1/> "
      "SELECT ?n WHERE { ?x foaf:firstName ?n . ?x foaf:age ?a . FILTER (?a > 30) }");
  ASSERT_EQ(q.root->kind, NodeKind::kProject);
  const AstNode& sel = *q.root->children.at(0);
  ASSERT_EQ(sel.kind, NodeKind::kSelect);
  EXPECT_EQ(sel.conditions[0].op, rdf::CompareOp::kGt);
  EXPECT_EQ(sel.children.at(0)->kind, NodeKind::kRelation);
  EXPECT_EQ(count_nodes(*p.root, NodeKind::kJoin), 0u);
}

TEST(Ast, NonEqualityFilterHoistedAboveJoins) {
  auto p = plan_file("bsbm/q7.rq");
  ASSERT_EQ(p.root->kind, NodeKind::kProject);
  const AstNode& top = *p.root->children.at(0);
  ASSERT_EQ(top.kind, NodeKind::kSelect);
  EXPECT_EQ(top.conditions[0].op, rdf::CompareOp::kGt);
  EXPECT_EQ(count_nodes(top, NodeKind::kJoin), 4u);
  EXPECT_EQ(relations(top).size(), 5u);
}

TEST(Ast, ModifiersAtTheTop) {
  auto p = plan_file("bsbm/q1.rq");
  // Only Project, Sort and Dedup may sit above the branch tree.
  bool saw_sort = false, saw_dedup = false;
  for (const AstNode* n = p.root.get(); n->kind == NodeKind::kSort ||
                                        n->kind == NodeKind::kDedup ||
                                        n->kind == NodeKind::kProject;
       n = n->children.at(0).get()) {
    saw_sort = saw_sort || n->kind == NodeKind::kSort;
    saw_dedup = saw_dedup || n->kind == NodeKind::kDedup;
  }
  EXPECT_TRUE(saw_sort);
  EXPECT_TRUE(saw_dedup);
  EXPECT_EQ(count_nodes(*p.root, NodeKind::kSort), 1u);
}

TEST(Ast, UnionHasTwoSubtrees) {
  auto p = plan_file("bsbm/q4.rq");
  EXPECT_EQ(count_nodes(*p.root, NodeKind::kUnion), 1u);
  EXPECT_EQ(p.branches.size(), 2u);
}

TEST(Ast, RootCartesianProductRejected) {
  EXPECT_THROW(plan_text("SELECT ?a ?b WHERE { ?x <http://x/p> ?a . ?y <http://x/q> ?b }"),
               PlanningError);
}

TEST(Ast, ExplainMentionsEveryView) {
  auto p = plan_file("bsbm/q7.rq");
  auto text = explain(p);
  for (const auto& v : p.views) EXPECT_NE(text.find(v.name), std::string::npos);
}

// A Select with a non-equality condition must not have a Join above it
// inside the same branch tree.
bool nonequality_under_join(const AstNode& n, bool under_join) {
  if (n.kind == NodeKind::kSelect && !n.conditions.at(0).is_equality() && under_join) return true;
  bool below = under_join || n.kind == NodeKind::kJoin;
  for (const auto& c : n.children) {
    if (nonequality_under_join(*c, below)) return true;
  }
  return false;
}

// Joins from the definition: unordered pairs of distinct subjects where one
// has a pattern with the other as object.
std::size_t independent_edge_count(const sparql::Branch& b) {
  std::set<std::string> subjects;
  for (const auto& s : b.scopes) {
    for (const auto& p : s.patterns) subjects.insert(term_name(p.subject));
  }
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& s : b.scopes) {
    for (const auto& p : s.patterns) {
      if (p.object.is_literal()) continue;
      std::string o = term_name(p.object), sub = term_name(p.subject);
      if (o != sub && subjects.count(o)) edges.insert(std::minmax(sub, o));
    }
  }
  return edges.size();
}

TEST(Properties, RandomQueries) {
  std::mt19937_64 rng(4242);
  int planned = 0;
  for (int i = 0; i < 300; ++i) {
    auto data = testing::random_dataset(rng, {.max_triples = 40});
    auto text = testing::random_query(rng, data);
    auto q = sparql::parse_sparql(text, &data.prefixes);
    QueryPlan p;
    try {
      p = plan_query(q, {});
    } catch (const Error& e) {
      ADD_FAILURE() << e.what() << "\n" << text;
      continue;
    }
    ++planned;
    std::size_t edges = 0;
    bool value_joins = false;
    for (const auto& b : p.branches) {
      // A DESCRIBE target that is never a subject is joined in as a bare view.
      edges += independent_edge_count(b.branch) + b.bare_views.size();
      value_joins = value_joins || count_nodes(*b.tree, NodeKind::kJoin) != b.joins.size();
    }
    EXPECT_EQ(count_joins(q), edges) << text;
    // Subjects linked only by a shared object variable are joined on its
    // value; those joins are not subject-object joins and are not counted.
    if (!value_joins) EXPECT_EQ(count_joins(q), oracle::oracle_join_count(q)) << text;
    EXPECT_FALSE(nonequality_under_join(*p.root, false)) << text;
    auto again = plan_query(q, {});
    EXPECT_TRUE(structurally_equal(*p.root, *again.root)) << text;
    for (const auto& b : p.branches) {
      if (b.bare_views.empty()) {
        EXPECT_EQ(b.joins.empty(), independent_edge_count(b.branch) == 0) << text;
      }
      EXPECT_EQ(count_nodes(*b.tree, NodeKind::kJoin), relations(*b.tree).size() - 1) << text;
    }
  }
  EXPECT_EQ(planned, 300);
}

}  // namespace
}  // namespace rdfpt::plan
