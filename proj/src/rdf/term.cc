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

#include "rdfpt/rdf/term.h"

#include <cstdio>

namespace rdfpt::rdf {

Term Term::uri(std::string full, std::string compact) {
  Term t;
  t.kind = TermKind::kUri;
  if (compact.empty()) compact = full;
  t.value = std::move(full);
  t.compact = std::move(compact);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype,
                   std::string lang) {
  Term t;
  t.kind = TermKind::kLiteral;
  t.value = std::move(lexical);
  t.datatype = std::move(datatype);
  t.lang = std::move(lang);
  return t;
}

Term Term::variable(std::string name) {
  Term t;
  t.kind = TermKind::kVariable;
  t.value = std::move(name);
  return t;
}

bool Term::is_placeholder() const {
  return kind == TermKind::kUri && value.size() >= 2 && value.front() == '%' &&
         value.back() == '%';
}

std::string xsd(std::string_view local) {
  std::string out(kXsd);
  out += local;
  return out;
}

std::string escape_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04X", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string to_ntriples(const Term& term) {
  switch (term.kind) {
    case TermKind::kUri:
      return "<" + term.value + ">";
    case TermKind::kLiteral: {
      std::string out = "\"" + escape_literal(term.value) + "\"";
      if (!term.lang.empty()) {
        out += "@" + term.lang;
      } else if (!term.datatype.empty()) {
        out += "^^<" + term.datatype + ">";
      }
      return out;
    }
    case TermKind::kVariable:
      return "?" + term.value;
  }
  return {};
}

std::string to_ntriples(const Triple& triple) {
  return to_ntriples(triple.subject) + " " + to_ntriples(triple.predicate) +
         " " + to_ntriples(triple.object) + " .";
}

}  // namespace rdfpt::rdf
