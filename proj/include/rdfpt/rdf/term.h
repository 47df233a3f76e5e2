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

namespace rdfpt::rdf {

inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

enum class TermKind { kUri, kLiteral, kVariable };

// One position of a triple or triple pattern.
//   uri:      `value` is the full URI, `compact` the "label_local" form
//             (or the full URI when no namespace matched).
//   literal:  `value` is the lexical form; datatype is a full URI or empty.
//   variable: `value` is the name without the leading '?'.
struct Term {
  TermKind kind = TermKind::kUri;
  std::string value;
  std::string compact;
  std::string datatype;
  std::string lang;

  static Term uri(std::string full, std::string compact = {});
  static Term literal(std::string lexical, std::string datatype = {},
                      std::string lang = {});
  static Term variable(std::string name);

  bool is_uri() const { return kind == TermKind::kUri; }
  bool is_literal() const { return kind == TermKind::kLiteral; }
  bool is_variable() const { return kind == TermKind::kVariable; }

  // `%Name%` constants stand for benchmark parameters that are substituted
  // by a driver; they are URIs that never occur in data.
  bool is_placeholder() const;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

std::string xsd(std::string_view local);

// N-Triples surface syntax for a uri or literal term.
std::string to_ntriples(const Term& term);
std::string to_ntriples(const Triple& triple);

// Escapes quotes, backslashes and control characters as N-Triples and
// SPARQL string literals expect.
std::string escape_literal(std::string_view text);

}  // namespace rdfpt::rdf
