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

// rdfpt: load N-Triples into a property table and answer SPARQL over it.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdfpt/error.h"
#include "rdfpt/exec/physical_plan.h"
#include "rdfpt/oracle/bench.h"
#include "rdfpt/oracle/compare.h"
#include "rdfpt/oracle/database.h"
#include "rdfpt/oracle/degree_histogram.h"
#include "rdfpt/oracle/oracle.h"
#include "rdfpt/oracle/synthetic.h"
#include "rdfpt/plan/explain.h"

namespace fs = std::filesystem;
using namespace rdfpt;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

rdf::PrefixTable read_prefixes(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return rdf::PrefixTable::parse_sidecar(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Property-table RDF store with a SPARQL to MapReduce query pipeline"};
  app.require_subcommand(1);

  std::size_t parallelism = 1;
  app.add_option("--parallelism", parallelism, "worker threads for map and reduce tasks")
      ->check(CLI::PositiveNumber);

  // load
  auto* load = app.add_subcommand("load", "bulk load an N-Triples file");
  std::string nt_path, prefix_path, out_dir;
  std::size_t regions = 1;
  std::uint64_t seed = 42;
  load->add_option("nt", nt_path, "input N-Triples file")->required();
  load->add_option("--prefixes", prefix_path, "prefix sidecar (label<TAB>namespace)");
  load->add_option("--regions", regions, "region count (power of two)");
  load->add_option("--seed", seed, "sampler seed");
  load->add_option("--out", out_dir, "database directory")->required();

  // query / explain
  std::string db_dir, sparql_path;
  bool emit_sql = false, metrics = false, oracle_check = false, physical = false;
  auto* query = app.add_subcommand("query", "run a SPARQL query");
  query->add_option("db", db_dir, "database directory")->required();
  query->add_option("--sparql", sparql_path, "query file")->required();
  query->add_flag("--emit-sql", emit_sql, "print the generated SQL before the results");
  query->add_flag("--metrics", metrics, "print stage metrics as JSON lines on stderr");
  query->add_flag("--oracle-check", oracle_check,
                  "compare with the triple-table reference evaluator");

  auto* explain = app.add_subcommand("explain", "show the query plan");
  explain->add_option("db", db_dir, "database directory")->required();
  explain->add_option("--sparql", sparql_path, "query file")->required();
  explain->add_flag("--physical", physical, "show the MapReduce stage plan");

  // stats
  bool histogram = false;
  auto* stats = app.add_subcommand("stats", "dataset statistics");
  stats->add_option("db", db_dir, "database directory")->required();
  stats->add_flag("--degree-histogram", histogram, "objects-per-subject histogram");

  // gen
  oracle::SyntheticConfig gen_cfg;
  std::string preset, gen_out;
  auto* gen = app.add_subcommand("gen", "write a synthetic N-Triples corpus");
  gen->add_option("--subjects", gen_cfg.subjects, "subject count");
  gen->add_option("--predicates", gen_cfg.predicates, "predicate count");
  gen->add_option("--density", gen_cfg.density, "share of filled cells");
  gen->add_option("--multivalue", gen_cfg.multivalue_rate, "chance of a second value");
  gen->add_option("--preset", preset, "bsbm or dbpedia (sets predicates and density)");
  gen->add_option("--seed", gen_cfg.seed, "random seed");
  gen->add_option("--out", gen_out, "output file")->required();

  // bench
  std::string queries_dir;
  std::size_t reps = 3;
  auto* bench = app.add_subcommand("bench", "time a directory of queries");
  bench->add_option("db", db_dir, "database directory")->required();
  bench->add_option("--queries", queries_dir, "directory of .rq files")->required();
  bench->add_option("--reps", reps, "repetitions per query")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  exec::ExecOptions opts;
  opts.parallelism = parallelism;
  try {
    if (*load) {
      load::LoadOptions lo;
      lo.regions = regions;
      lo.sampler.seed = seed;
      lo.parallelism = parallelism;
      fs::create_directories(out_dir);
      auto report = oracle::create_database(nt_path, read_prefixes(prefix_path), lo, out_dir);
      std::cout << load::to_jsonl(report);
    } else if (*query) {
      auto db = oracle::open_database(db_dir);
      std::string text = read_file(sparql_path);
      auto run = oracle::run_query(db.table, text, opts);
      if (emit_sql) std::cout << run.sql.text << "\n\n";
      std::cout << run.exec.result.to_tsv();
      if (metrics) std::cerr << run.exec.metrics.to_jsonl();
      if (oracle_check) {
        auto triples = db.load_triples();
        auto expected = oracle::oracle_eval(run.query, triples);
        const exec::ResultSet* unlimited = nullptr;
        exec::ResultSet full;
        if (run.query.limit) {
          auto q = run.query;
          q.limit.reset();
          full = oracle::oracle_eval(q, triples);
          unlimited = &full;
        }
        auto cmp = oracle::compare_results(run.exec.result, expected, run.query, unlimited);
        if (!cmp.equal) {
          std::cerr << "oracle-check: MISMATCH: " << cmp.detail << "\n";
          return 1;
        }
        std::cerr << "oracle-check: ok (" << expected.rows.size() << " rows)\n";
      }
    } else if (*explain) {
      auto db = oracle::open_database(db_dir);
      auto run = oracle::plan_text(db.table, read_file(sparql_path));
      if (physical) {
        std::cout << exec::explain_physical(run.physical);
      } else {
        std::cout << plan::explain(run.plan) << "\nSQL:\n" << run.sql.text << "\n";
      }
    } else if (*stats) {
      auto db = oracle::open_database(db_dir);
      nlohmann::ordered_json s;
      s["type"] = "table";
      s["regions"] = db.table.region_count();
      s["blocks"] = db.table.block_count();
      s["entries"] = db.table.entry_count();
      s["columns"] = db.table.columns().size();
      std::cout << s.dump() << "\n";
      if (histogram) {
        std::uint64_t subjects = 0;
        for (const auto& [degree, count] : oracle::degree_histogram(db.table, parallelism)) {
          nlohmann::ordered_json j;
          j["type"] = "degree";
          j["degree"] = degree;
          j["subjects"] = count;
          subjects += count;
          std::cout << j.dump() << "\n";
        }
        nlohmann::ordered_json t;
        t["type"] = "degree_total";
        t["subjects"] = subjects;
        std::cout << t.dump() << "\n";
      }
    } else if (*gen) {
      if (!preset.empty()) {
        const auto* p = oracle::find_preset(preset);
        if (p == nullptr) throw InvalidArgument("unknown preset " + preset);
        gen_cfg.predicates = p->predicates;
        gen_cfg.density = p->density;
      }
      std::ofstream out(gen_out);
      if (!out) throw IoError("cannot write " + gen_out);
      auto plan = oracle::generate_synthetic(gen_cfg, out);
      nlohmann::ordered_json j;
      j["type"] = "gen";
      j["triples"] = plan.triples;
      j["subjects"] = gen_cfg.subjects;
      j["predicates"] = gen_cfg.predicates;
      j["fill_fraction"] = plan.fill_fraction(gen_cfg);
      std::cout << j.dump() << "\n";
    } else if (*bench) {
      auto db = oracle::open_database(db_dir);
      std::vector<std::pair<std::string, std::string>> queries;
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(queries_dir)) {
        if (e.path().extension() == ".rq") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) queries.push_back({f.stem().string(), read_file(f.string())});
      std::cout << oracle::bench(db.table, queries, reps, opts).to_jsonl();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
