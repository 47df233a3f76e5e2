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

#include "rdfpt/load/bulk_loader.h"
#include "rdfpt/oracle/triple_table.h"
#include "rdfpt/rdf/prefix_table.h"
#include "rdfpt/storage/property_table.h"

namespace rdfpt::testing {

// Absolute path of a file under tests/data.
std::string data_path(const std::string& relative);
std::string read_file(const std::string& path);
rdf::PrefixTable read_prefixes(const std::string& path);

struct Loaded {
  storage::PropertyTable table;
  oracle::TripleTable triples;
  load::LoadReport report;
};

// Bulk loads N-Triples text and builds the matching triple table.
Loaded load_text(const std::string& ntriples, const rdf::PrefixTable& prefixes,
                 std::size_t regions = 1, std::size_t block_capacity = 0);

}  // namespace rdfpt::testing
