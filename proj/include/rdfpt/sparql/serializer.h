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

#include "rdfpt/sparql/query.h"

namespace rdfpt::sparql {

// Canonical SPARQL text. URIs are written in full, so re-parsing the
// output with the same prefixes gives back an equal SparqlQuery.
std::string serialize(const SparqlQuery& query);
std::string serialize(const GraphPattern& group);
std::string serialize(const Filter& filter);
std::string term_text(const rdf::Term& term);

}  // namespace rdfpt::sparql
