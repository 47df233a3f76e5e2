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

#include "rdfpt/sparql/query.h"

namespace rdfpt::sparql {

namespace {

void add_var(const rdf::Term& t, std::vector<std::string>& out,
             std::set<std::string>& seen) {
  if (t.is_variable() && seen.insert(t.value).second) out.push_back(t.value);
}

}  // namespace

void collect_pattern_variables(const GraphPattern& group,
                               std::vector<std::string>& out,
                               std::set<std::string>& seen) {
  for (const auto& tp : group.patterns) {
    add_var(tp.subject, out, seen);
    add_var(tp.predicate, out, seen);
    add_var(tp.object, out, seen);
  }
  for (const auto& opt : group.optionals) collect_pattern_variables(opt, out, seen);
  for (const auto& [a, b] : group.unions) {
    collect_pattern_variables(a, out, seen);
    collect_pattern_variables(b, out, seen);
  }
}

std::vector<std::string> pattern_variables(const GraphPattern& group) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_pattern_variables(group, out, seen);
  return out;
}

std::set<std::string> variables_of(const std::vector<TriplePattern>& patterns) {
  std::set<std::string> vars;
  for (const auto& tp : patterns) {
    for (const auto* t : {&tp.subject, &tp.predicate, &tp.object}) {
      if (t->is_variable()) vars.insert(t->value);
    }
  }
  return vars;
}

}  // namespace rdfpt::sparql
