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

#include <istream>
#include <string>
#include <vector>

#include "rdfpt/rdf/term.h"
#include "rdfpt/rdf/value.h"

namespace rdfpt::oracle {

struct StoredTriple {
  std::string subject;    // full URI
  std::string predicate;  // full URI
  rdf::Value object;      // typed, URIs in full form
};

// The three-column baseline: every triple of the dataset, duplicates kept.
class TripleTable {
 public:
  static TripleTable from_ntriples(std::istream& in);

  void add(const rdf::Triple& triple);
  const std::vector<StoredTriple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }

 private:
  std::vector<StoredTriple> triples_;
};

}  // namespace rdfpt::oracle
