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
#include <string_view>
#include <vector>

#include "rdfpt/rdf/term.h"

namespace rdfpt::rdf {

// Parses one N-Triples statement. URIs stay in full form. Throws
// ParseError (offset into `line`) or UnsupportedFeature for blank nodes.
Triple parse_ntriples(std::string_view line);

// True for empty lines and comment-only lines, which carry no statement.
bool is_blank_or_comment(std::string_view line);

// Whole-document convenience: skips blank/comment lines and prefixes parse
// errors with the 1-based line number.
std::vector<Triple> parse_ntriples_document(std::istream& in);

// Decodes \t \n \" \uXXXX ... escapes into UTF-8.
std::string unescape(std::string_view text, std::size_t base_offset);

}  // namespace rdfpt::rdf
