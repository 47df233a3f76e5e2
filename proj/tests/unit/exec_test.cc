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

#include <random>
#include <sstream>

#include "fixtures.h"
#include "nested_loop_eval.h"
#include "random_corpus.h"
#include "rdfpt/exec/executor.h"
#include "rdfpt/exec/physical_plan.h"
#include "rdfpt/oracle/compare.h"
#include "rdfpt/oracle/database.h"
#include "rdfpt/oracle/oracle.h"
#include "rdfpt/sparql/parser.h"

namespace rdfpt::exec {
namespace {

using testing::data_path;
using testing::read_file;

const char* kEx = "PREFIX ex: <http://example.org/>\n";

rdf::PrefixTable ex_prefixes() {
  rdf::PrefixTable p;
  p.add("ex", "http://example.org/");
  return p;
}

std::string nt(const std::string& s, const std::string& p, const std::string& o) {
  return "<http://example.org/" + s + "> <http://example.org/" + p + "> " + o + " .\n";
}
std::string link(const std::string& s) { return "<http://example.org/" + s + ">"; }
std::string num(int v) {
  return "\"" + std::to_string(v) + "\"^^<http://www.w3.org/2001/XMLSchema#integer>";
}
std::string str(const std::string& v) { return "\"" + v + "\""; }

std::vector<std::vector<std::string>> rows_of(const ResultSet& r) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : r.rows) out.push_back(row.cells);
  std::sort(out.begin(), out.end());
  return out;
}

struct Run {
  ResultSet result;
  ExecMetrics metrics;
};

// Runs the pipeline and checks it against the reference evaluator.
Run run(const std::string& data, const std::string& query, std::size_t regions = 1,
        ExecOptions opt = {}) {
  auto l = testing::load_text(data, ex_prefixes(), regions);
  auto r = oracle::run_query(l.table, query, opt);
  auto expect = oracle::oracle_eval(r.query, l.triples);
  auto cmp = oracle::compare_results(r.exec.result, expect, r.query);
  EXPECT_TRUE(cmp.equal) << cmp.detail << "\n" << query;
  return {r.exec.result, r.exec.metrics};
}

using Rows = std::vector<std::vector<std::string>>;

// The same-subject OPTIONAL with a filter, one dataset per case.
TEST(Optional, SameSubjectCases) {
  std::string q = std::string(kEx) +
                  "SELECT ?n ?a WHERE { ?x ex:name ?n . "
                  "OPTIONAL { ?x ex:age ?a . FILTER (?a > 20) } }";
  // Case 1: the required pattern does not match.
  EXPECT_TRUE(run(nt("s", "age", num(30)), q).result.rows.empty());
  // Case 2: required matches, optional does not.
  EXPECT_EQ(rows_of(run(nt("s", "name", str("Ann")), q).result), (Rows{{"\"Ann\"", "NULL"}}));
  // Case 3: optional matches but its filter fails; the row is dropped.
  EXPECT_TRUE(run(nt("s", "name", str("Ann")) + nt("s", "age", num(10)), q).result.rows.empty());
  // Case 4: everything matches.
  EXPECT_EQ(rows_of(run(nt("s", "name", str("Ann")) + nt("s", "age", num(30)), q).result),
            (Rows{{"\"Ann\"", "30"}}));
}

// The same four cases where the OPTIONAL reaches another subject through a
// left outer join.
TEST(Optional, JoinedSubjectCases) {
  std::string q = std::string(kEx) +
                  "SELECT ?n ?c WHERE { ?x ex:name ?n . "
                  "OPTIONAL { ?x ex:vendor ?v . ?v ex:country ?c . FILTER (?c = \"DE\") } }";
  std::string base = nt("s", "name", str("Ann"));
  EXPECT_TRUE(run(nt("s", "vendor", link("v")) + nt("v", "country", str("DE")), q)
                  .result.rows.empty());
  EXPECT_EQ(rows_of(run(base + nt("s", "vendor", link("v")), q).result),
            (Rows{{"\"Ann\"", "NULL"}}));
  EXPECT_TRUE(run(base + nt("s", "vendor", link("v")) + nt("v", "country", str("US")), q)
                  .result.rows.empty());
  EXPECT_EQ(rows_of(run(base + nt("s", "vendor", link("v")) + nt("v", "country", str("DE")), q)
                        .result),
            (Rows{{"\"Ann\"", "\"DE\""}}));
}

TEST(Optional, BoundFilterRemovesPaddedRows) {
  std::string data = nt("a", "name", str("A")) + nt("b", "name", str("B")) +
                     nt("b", "nick", str("bee"));
  auto bound = run(data, std::string(kEx) + "SELECT ?n WHERE { ?x ex:name ?n . "
                                            "OPTIONAL { ?x ex:nick ?k } FILTER (bound(?k)) }");
  EXPECT_EQ(rows_of(bound.result), (Rows{{"\"B\""}}));
  auto unbound = run(data, std::string(kEx) + "SELECT ?n WHERE { ?x ex:name ?n . "
                                              "OPTIONAL { ?x ex:nick ?k } FILTER (!bound(?k)) }");
  EXPECT_EQ(rows_of(unbound.result), (Rows{{"\"A\""}}));
}

TEST(Join, PeopleDataCarriesPopulation) {
  auto l = testing::load_text(read_file(data_path("join/people.nt")),
                              testing::read_prefixes(data_path("join/prefixes.tsv")));
  auto r = oracle::run_query(l.table, read_file(data_path("join/join_query.rq")));
  auto got = rows_of(r.exec.result);
  ASSERT_EQ(got.size(), 2u);
  for (const auto& row : got) EXPECT_NE(row[2], "NULL");
  auto expect = oracle::oracle_eval(r.query, l.triples);
  EXPECT_TRUE(oracle::compare_results(r.exec.result, expect, r.query).equal);
}

TEST(Join, LeftOuterWithoutMatchPadsNulls) {
  std::string data = nt("a", "name", str("A")) + nt("a", "knows", link("b"));
  auto r = run(data, std::string(kEx) + "SELECT ?n ?m WHERE { ?x ex:name ?n . "
                                        "OPTIONAL { ?x ex:knows ?y . ?y ex:name ?m } }");
  EXPECT_EQ(rows_of(r.result), (Rows{{"\"A\"", "NULL"}}));
}

TEST(Join, EmptyRightSideInnerJoinIsEmpty) {
  std::string data = nt("a", "name", str("A")) + nt("a", "knows", link("b"));
  auto r = run(data, std::string(kEx) + "SELECT ?n ?m WHERE { ?x ex:name ?n . "
                                        "?x ex:knows ?y . ?y ex:name ?m }");
  EXPECT_TRUE(r.result.rows.empty());
}

TEST(Join, MultiValuedJoinColumnExpands) {
  std::string data = nt("a", "knows", link("b")) + nt("a", "knows", link("c")) +
                     nt("b", "name", str("B")) + nt("c", "name", str("C"));
  auto r = run(data, std::string(kEx) + "SELECT ?m WHERE { ?x ex:knows ?y . ?y ex:name ?m }", 2);
  EXPECT_EQ(rows_of(r.result), (Rows{{"\"B\""}, {"\"C\""}}));
}

// Random single-join queries against the nested-loop evaluator.
TEST(Join, ReduceJoinMatchesNestedLoops) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    auto data = testing::random_dataset(rng, {.max_triples = 200, .max_predicates = 6});
    auto l = testing::load_text(data.ntriples, data.prefixes, 2, 16);
    std::size_t p = 1 + rng() % (data.predicate_kinds.size() - 1);
    std::string q = std::string(kEx) + "SELECT ?a ?b ?v WHERE { ?a ex:p0 ?b . ?b ex:p" +
                    std::to_string(p) + " ?v }";
    auto r = oracle::run_query(l.table, q);
    auto ref = testing::nested_loop_eval(r.query, l.triples);
    EXPECT_EQ(rows_of(r.exec.result), rows_of(ref)) << q;
  }
}

TEST(Physical, NoJoinWithLimitHasTwoStages) {
  auto q = sparql::parse_sparql(std::string(kEx) + "SELECT ?n WHERE { ?x ex:name ?n } LIMIT 10");
  auto plan = compile_physical(plan::plan_query(q, {}).logical());
  EXPECT_EQ(plan.stages.size(), 2u);
  auto text = explain_physical(plan);
  EXPECT_NE(text.find("Stage-2 depends on stages: Stage-1"), std::string::npos) << text;
  EXPECT_NE(text.find("limit: 10"), std::string::npos) << text;
}

std::size_t count_kind(const PhysicalPlan& p, StageKind k) {
  return std::count_if(p.stages.begin(), p.stages.end(),
                       [&](const Stage& s) { return s.kind == k; });
}

TEST(Physical, JoinQueryStages) {
  auto q = sparql::parse_sparql(read_file(data_path("join/join_query.rq")));
  auto plan = compile_physical(plan::plan_query(q, {}).logical());
  EXPECT_EQ(count_kind(plan, StageKind::kScan), 2u);
  EXPECT_EQ(count_kind(plan, StageKind::kJoin), 1u);
  EXPECT_EQ(plan.stages.size(), 2u + 1u + count_kind(plan, StageKind::kFinalize));
  EXPECT_TRUE(plan.stages.back().finalize || plan.stages.back().kind == StageKind::kFinalize);
}

TEST(Physical, NestedOptionalQueryHasFourJoins) {
  auto q = sparql::parse_sparql(read_file(data_path("bsbm/q7.rq")));
  auto plan = compile_physical(plan::plan_query(q, {}).logical());
  EXPECT_EQ(count_kind(plan, StageKind::kJoin), 4u);
  EXPECT_EQ(count_kind(plan, StageKind::kScan), 5u);
}

TEST(Physical, SqlAndTreeCompileAlike) {
  for (const char* f : {"join/join_query.rq", "bsbm/q1.rq", "bsbm/q4.rq", "bsbm/q7.rq"}) {
    auto p = plan::plan_query(sparql::parse_sparql(read_file(data_path(f))), {});
    EXPECT_EQ(explain_physical(compile_physical(p.logical())),
              explain_physical(compile_physical(sql::generate_sql(p))))
        << f;
  }
}

std::string dense_table() {
  std::string out;
  for (int s = 0; s < 100; ++s) {
    std::string subject = "s" + std::to_string(s);
    out += nt(subject, "p0", link("s" + std::to_string((s + 1) % 100)));
    for (int p = 1; p < 10; ++p) out += nt(subject, "p" + std::to_string(p), num(s * p));
  }
  return out;
}

TEST(Metrics, TwoWayJoinShuffleBound) {
  auto r = run(dense_table(), std::string(kEx) + "SELECT ?a ?v WHERE { ?a ex:p0 ?b . ?b ex:p1 ?v }",
               4);
  EXPECT_EQ(r.result.rows.size(), 100u);
  EXPECT_LE(r.metrics.totals().shuffled_records, 100u * 10u * 2u);
  EXPECT_GT(r.metrics.totals().shuffled_records, 0u);
}

TEST(Metrics, JsonLinesPerStage) {
  auto r = run(dense_table(), std::string(kEx) + "SELECT ?a ?v WHERE { ?a ex:p0 ?b . ?b ex:p1 ?v }");
  std::string jsonl = r.metrics.to_jsonl();
  EXPECT_EQ(static_cast<std::size_t>(std::count(jsonl.begin(), jsonl.end(), '\n')),
            r.metrics.stages.size() + 1);
  EXPECT_NE(jsonl.find("\"type\":\"total\""), std::string::npos);
}

TEST(Metrics, PinnedSubjectSkipsBlocks) {
  auto l = testing::load_text(dense_table(), ex_prefixes(), 1, 50);
  auto r = oracle::run_query(l.table, std::string(kEx) + "SELECT ?v WHERE { ex:s42 ex:p3 ?v }");
  EXPECT_EQ(rows_of(r.exec.result), (Rows{{"126"}}));
  EXPECT_GT(r.exec.metrics.totals().blocks_skipped, 0u);
}

TEST(Determinism, ParallelismDoesNotChangeBytes) {
  auto l = testing::load_text(dense_table(), ex_prefixes(), 4, 64);
  for (const char* q : {"SELECT ?a ?v WHERE { ?a ex:p0 ?b . ?b ex:p1 ?v } ORDER BY DESC(?v)",
                        "SELECT DISTINCT ?b WHERE { ?a ex:p0 ?b . OPTIONAL { ?b ex:p2 ?x . "
                        "FILTER (?x > 50) } }"}) {
    std::string text = std::string(kEx) + q;
    auto base = oracle::run_query(l.table, text, {.parallelism = 1});
    for (std::size_t par : {2u, 8u}) {
      auto other = oracle::run_query(l.table, text, {.parallelism = par});
      EXPECT_EQ(other.exec.result.to_tsv(), base.exec.result.to_tsv()) << q;
      EXPECT_EQ(other.exec.metrics.to_jsonl(), base.exec.metrics.to_jsonl()) << q;
    }
  }
}

TEST(Describe, ListsEveryPredicate) {
  std::string data = nt("r", "reviewer", link("p")) + nt("p", "name", str("Pat")) +
                     nt("p", "mbox", str("a@b")) + nt("p", "mbox", str("c@d"));
  auto r = run(data, std::string(kEx) + "DESCRIBE ?x WHERE { ex:r ex:reviewer ?x }");
  ASSERT_EQ(r.result.rows.size(), 1u);
  EXPECT_EQ(r.result.rows[0].cells[0], "<http://example.org/p>");
  std::string joined;
  for (const auto& c : r.result.rows[0].cells) joined += c + "|";
  EXPECT_NE(joined.find("[\"a@b\", \"c@d\"]"), std::string::npos) << joined;
}

TEST(Modifiers, OrderLimitDistinct) {
  auto r = run(dense_table(),
               std::string(kEx) + "SELECT DISTINCT ?v WHERE { ?a ex:p1 ?v . FILTER (?v < 30) } "
                                  "ORDER BY DESC(?v) LIMIT 3");
  std::vector<std::string> got;
  for (const auto& row : r.result.rows) got.push_back(row.cells[0]);
  EXPECT_EQ(got, (std::vector<std::string>{"29", "28", "27"}));
}

TEST(Result, TsvFormat) {
  ResultSet r;
  r.header = {"?a", "?b"};
  r.rows.push_back({{"1", "NULL"}, {}});
  EXPECT_EQ(r.to_tsv(), "?a\t?b\n1\tNULL\n");
  EXPECT_EQ(render_list({}), "NULL");
  EXPECT_EQ(render_list({rdf::Value::string("b"), rdf::Value::string("a")}), "[\"a\", \"b\"]");
}

}  // namespace
}  // namespace rdfpt::exec
