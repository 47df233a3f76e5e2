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

#include "rdfpt/sparql/serializer.h"

namespace rdfpt::sparql {

std::string term_text(const rdf::Term& t) {
  switch (t.kind) {
    case rdf::TermKind::kVariable:
      return "?" + t.value;
    case rdf::TermKind::kUri:
      return t.is_placeholder() ? t.value : "<" + t.value + ">";
    case rdf::TermKind::kLiteral:
      return rdf::to_ntriples(t);
  }
  return {};
}

std::string serialize(const Filter& f) {
  switch (f.kind) {
    case FilterKind::kCompare:
      return "FILTER(?" + f.variable + " " + std::string(rdf::op_symbol(f.op)) + " " +
             term_text(f.constant) + ")";
    case FilterKind::kRegex: {
      std::string out = "FILTER(regex(?" + f.variable + ", \"" +
                        rdf::escape_literal(f.pattern) + "\"";
      if (!f.flags.empty()) out += ", \"" + rdf::escape_literal(f.flags) + "\"";
      return out + "))";
    }
    case FilterKind::kBound:
      return std::string("FILTER(") + (f.negated ? "!" : "") + "bound(?" +
             f.variable + "))";
  }
  return {};
}

std::string serialize(const GraphPattern& g) {
  std::string out = "{ ";
  for (const auto& tp : g.patterns) {
    out += term_text(tp.subject) + " " + term_text(tp.predicate) + " " +
           term_text(tp.object) + " . ";
  }
  for (const auto& f : g.filters) out += serialize(f) + " ";
  for (const auto& o : g.optionals) out += "OPTIONAL " + serialize(o) + " ";
  for (const auto& [a, b] : g.unions) {
    out += serialize(a) + " UNION " + serialize(b) + " ";
  }
  return out + "}";
}

std::string serialize(const SparqlQuery& q) {
  std::string out;
  for (const auto& [label, ns] : q.prefixes.entries()) {
    out += "PREFIX " + label + ": <" + ns + ">\n";
  }
  if (q.form == QueryForm::kDescribe) {
    out += "DESCRIBE " + term_text(*q.describe_target);
  } else {
    out += "SELECT";
    if (q.distinct) out += " DISTINCT";
    if (q.reduced) out += " REDUCED";
    if (q.select_all) {
      out += " *";
    } else {
      for (const auto& v : q.projection) out += " ?" + v;
    }
  }
  out += "\nWHERE " + serialize(q.where) + "\n";
  if (!q.order_by.empty()) {
    out += "ORDER BY";
    for (const auto& k : q.order_by) {
      out += std::string(k.descending ? " DESC(?" : " ASC(?") + k.variable + ")";
    }
    out += "\n";
  }
  if (q.limit) out += "LIMIT " + std::to_string(*q.limit) + "\n";
  return out;
}

}  // namespace rdfpt::sparql
