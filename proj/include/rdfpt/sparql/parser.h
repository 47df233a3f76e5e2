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

#include <string_view>

#include "rdfpt/rdf/prefix_table.h"
#include "rdfpt/sparql/query.h"

namespace rdfpt::sparql {

// Parses the supported SELECT/DESCRIBE subset. Prefixed names resolve
// against the query's PREFIX declarations first and `fallback` second; the
// compact form of every URI term is computed the same way. Throws
// ParseError (with offset) for malformed text and UnsupportedFeature for
// constructs outside the subset.
SparqlQuery parse_sparql(std::string_view text,
                         const rdf::PrefixTable* fallback = nullptr);

}  // namespace rdfpt::sparql
