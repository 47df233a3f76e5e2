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

#include "rdfpt/oracle/triple_table.h"

#include "rdfpt/rdf/ntriples.h"

namespace rdfpt::oracle {

TripleTable TripleTable::from_ntriples(std::istream& in) {
  TripleTable t;
  for (const auto& triple : rdf::parse_ntriples_document(in)) t.add(triple);
  return t;
}

void TripleTable::add(const rdf::Triple& triple) {
  StoredTriple s;
  s.subject = triple.subject.value;
  s.predicate = triple.predicate.value;
  s.object = triple.object.is_uri() ? rdf::Value::uri(triple.object.value)
                                    : rdf::infer_primitive(triple.object).value;
  triples_.push_back(std::move(s));
}

}  // namespace rdfpt::oracle
