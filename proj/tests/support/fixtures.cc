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

#include "fixtures.h"

#include <fstream>
#include <sstream>

#include "rdfpt/error.h"

namespace rdfpt::testing {

std::string data_path(const std::string& relative) {
  return std::string(RDFPT_TEST_DATA_DIR) + "/" + relative;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

rdf::PrefixTable read_prefixes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return rdf::PrefixTable::parse_sidecar(in);
}

Loaded load_text(const std::string& ntriples, const rdf::PrefixTable& prefixes,
                 std::size_t regions, std::size_t block_capacity) {
  load::LoadOptions opts;
  opts.regions = regions;
  if (block_capacity != 0) opts.table.block_capacity = block_capacity;
  std::istringstream in(ntriples);
  auto result = load::bulk_load(in, prefixes, opts);
  std::istringstream again(ntriples);
  return {std::move(result.table), oracle::TripleTable::from_ntriples(again),
          std::move(result.report)};
}

}  // namespace rdfpt::testing
