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

#include <string>
#include <string_view>

#include "rdfpt/exec/executor.h"
#include "rdfpt/exec/physical_plan.h"
#include "rdfpt/load/bulk_loader.h"
#include "rdfpt/oracle/triple_table.h"
#include "rdfpt/plan/planner.h"
#include "rdfpt/sparql/query.h"
#include "rdfpt/sql/sql_generator.h"
#include "rdfpt/storage/property_table.h"

namespace rdfpt::oracle {

// The loaded input is kept next to the table so the reference evaluator
// can rebuild the triple table from it.
inline constexpr std::string_view kSourceName = "source.nt";

struct Database {
  std::string dir;
  storage::PropertyTable table;

  std::string source_path() const;
  TripleTable load_triples() const;
};

// Bulk loads `nt_path` and saves the table plus a copy of the input.
load::LoadReport create_database(const std::string& nt_path, const rdf::PrefixTable& prefixes,
                                 const load::LoadOptions& options, const std::string& out_dir);
Database open_database(const std::string& dir);

plan::Catalog catalog_of(const storage::PropertyTable& table);

// Query text -> plan -> SQL -> physical plan (compiled from the SQL text)
// -> execution.
struct QueryRun {
  sparql::SparqlQuery query;
  plan::QueryPlan plan;
  sql::SqlQueryText sql;
  exec::PhysicalPlan physical;
  exec::ExecResult exec;
};

QueryRun plan_text(const storage::PropertyTable& table, const std::string& sparql);
QueryRun run_query(const storage::PropertyTable& table, const std::string& sparql,
                   const exec::ExecOptions& options = {});

}  // namespace rdfpt::oracle
