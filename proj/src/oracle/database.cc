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

#include "rdfpt/oracle/database.h"

#include <filesystem>
#include <fstream>

#include "rdfpt/error.h"
#include "rdfpt/sparql/parser.h"
#include "rdfpt/storage/manifest.h"

namespace rdfpt::oracle {

namespace fs = std::filesystem;

std::string Database::source_path() const { return (fs::path(dir) / kSourceName).string(); }

TripleTable Database::load_triples() const {
  std::ifstream in(source_path());
  if (!in) throw IoError("cannot read " + source_path());
  return TripleTable::from_ntriples(in);
}

load::LoadReport create_database(const std::string& nt_path, const rdf::PrefixTable& prefixes,
                                 const load::LoadOptions& options, const std::string& out_dir) {
  std::ifstream in(nt_path);
  if (!in) throw IoError("cannot read " + nt_path);
  auto result = load::bulk_load(in, prefixes, options);
  storage::save_table(result.table, out_dir);
  std::error_code ec;
  fs::copy_file(nt_path, fs::path(out_dir) / kSourceName, fs::copy_options::overwrite_existing,
                ec);
  if (ec) throw IoError("cannot copy " + nt_path + ": " + ec.message());
  return result.report;
}

Database open_database(const std::string& dir) {
  Database db;
  db.dir = dir;
  db.table = storage::open_table(dir);
  return db;
}

plan::Catalog catalog_of(const storage::PropertyTable& table) {
  plan::Catalog c;
  c.prefixes = table.prefixes();
  c.types = table.types();
  c.columns = table.columns();
  return c;
}

QueryRun plan_text(const storage::PropertyTable& table, const std::string& sparql) {
  QueryRun run;
  run.query = sparql::parse_sparql(sparql, &table.prefixes());
  run.plan = plan::plan_query(run.query, catalog_of(table));
  run.sql = sql::generate_sql(run.plan);
  run.physical = exec::compile_physical(run.sql);
  return run;
}

QueryRun run_query(const storage::PropertyTable& table, const std::string& sparql,
                   const exec::ExecOptions& options) {
  QueryRun run = plan_text(table, sparql);
  run.exec = exec::execute(table, run.physical, options);
  return run;
}

}  // namespace rdfpt::oracle
