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

// Random datasets and queries: pipeline vs oracle, oracle vs nested loops.

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "fixtures.h"
#include "nested_loop_eval.h"
#include "random_corpus.h"
#include "rdfpt/error.h"
#include "rdfpt/oracle/compare.h"
#include "rdfpt/oracle/database.h"
#include "rdfpt/oracle/oracle.h"
#include "rdfpt/sparql/parser.h"

namespace rdfpt {
namespace {

using testing::load_text;
using testing::random_dataset;
using testing::random_query;

exec::ResultSet unlimited_oracle(sparql::SparqlQuery q, const oracle::TripleTable& t) {
  q.limit.reset();
  return oracle::oracle_eval(q, t);
}

TEST(Equivalence, PipelineMatchesOracle) {
  // RDFPT_STRESS_SEEDS widens the sweep for local bug hunting.
  std::uint64_t seeds = 60;
  if (const char* env = std::getenv("RDFPT_STRESS_SEEDS")) seeds = std::stoull(env);
  std::uint64_t checked = 0;
  for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
    std::mt19937_64 rng(seed);
    auto data = random_dataset(rng);
    auto loaded = load_text(data.ntriples, data.prefixes, data.subjects >= 16 ? 4 : 1);
    for (int q = 0; q < 4; ++q) {
      std::string text = random_query(rng, data);
      SCOPED_TRACE("seed " + std::to_string(seed) + "\n" + text);
      oracle::QueryRun run;
      try {
        run = oracle::run_query(loaded.table, text);
      } catch (const Error& e) {
        ADD_FAILURE() << e.what();
        continue;
      }
      auto expected = oracle::oracle_eval(run.query, loaded.triples);
      auto full = unlimited_oracle(run.query, loaded.triples);
      auto cmp = oracle::compare_results(run.exec.result, expected, run.query, &full);
      EXPECT_TRUE(cmp.equal) << cmp.detail << "\nSQL: " << run.sql.text;
      ++checked;
    }
  }
  EXPECT_EQ(checked, seeds * 4);
}

TEST(Equivalence, OracleMatchesNestedLoops) {
  std::uint64_t seeds = 20;
  if (const char* env = std::getenv("RDFPT_STRESS_SEEDS")) seeds = std::stoull(env);
  for (std::uint64_t seed = 100; seed < 100 + seeds; ++seed) {
    std::mt19937_64 rng(seed);
    testing::DatasetLimits small;
    small.max_triples = 200;
    auto data = random_dataset(rng, small);
    auto loaded = load_text(data.ntriples, data.prefixes);
    for (int q = 0; q < 5; ++q) {
      std::string text = random_query(rng, data);
      SCOPED_TRACE("seed " + std::to_string(seed) + "\n" + text);
      sparql::SparqlQuery query;
      exec::ResultSet a;
      try {
        query = sparql::parse_sparql(text);
        a = oracle::oracle_eval(query, loaded.triples);
      } catch (const Error& e) {
        ADD_FAILURE() << e.what();
        continue;
      }
      auto b = testing::nested_loop_eval(query, loaded.triples);
      auto full = unlimited_oracle(query, loaded.triples);
      auto cmp = oracle::compare_results(b, a, query, &full);
      EXPECT_TRUE(cmp.equal) << cmp.detail;
    }
  }
}

}  // namespace
}  // namespace rdfpt
