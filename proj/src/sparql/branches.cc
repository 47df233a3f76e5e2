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

#include "rdfpt/sparql/branches.h"

#include <functional>

#include "rdfpt/error.h"

namespace rdfpt::sparql {

namespace {

struct Flat {
  std::vector<TriplePattern> patterns;
  std::vector<Filter> filters;
  std::vector<const GraphPattern*> optionals;
};

void append(Flat& into, const Flat& from) {
  into.patterns.insert(into.patterns.end(), from.patterns.begin(), from.patterns.end());
  into.filters.insert(into.filters.end(), from.filters.begin(), from.filters.end());
  into.optionals.insert(into.optionals.end(), from.optionals.begin(),
                        from.optionals.end());
}

std::vector<Flat> flatten(const GraphPattern& g) {
  Flat own;
  own.patterns = g.patterns;
  own.filters = g.filters;
  for (const auto& o : g.optionals) own.optionals.push_back(&o);
  std::vector<Flat> out{own};
  for (const auto& [a, b] : g.unions) {
    std::vector<Flat> alts = flatten(a);
    for (auto& f : flatten(b)) alts.push_back(std::move(f));
    for (const auto& alt : alts) {
      auto vars = variables_of(alt.patterns);
      for (const auto& f : alt.filters) {
        if (!vars.count(f.variable)) {
          throw UnsupportedFeature("FILTER on ?" + f.variable +
                                   " outside the UNION alternative that binds it");
        }
      }
    }
    if (out.size() * alts.size() > kMaxBranches) {
      throw UnsupportedFeature("more than " + std::to_string(kMaxBranches) +
                               " UNION alternatives");
    }
    std::vector<Flat> next;
    for (const auto& base : out) {
      for (const auto& alt : alts) {
        Flat f = base;
        append(f, alt);
        next.push_back(std::move(f));
      }
    }
    out = std::move(next);
  }
  return out;
}

void add_scope(Branch& b, const GraphPattern& g, int parent) {
  if (!g.unions.empty()) throw UnsupportedFeature("UNION inside OPTIONAL");
  if (g.patterns.empty()) throw UnsupportedFeature("OPTIONAL without triple patterns");
  int id = static_cast<int>(b.scopes.size());
  Scope s;
  s.parent = parent;
  s.depth = b.scopes[parent].depth + 1;
  s.patterns = g.patterns;
  s.filters = g.filters;
  b.scopes.push_back(std::move(s));
  b.scopes[parent].children.push_back(id);
  for (const auto& o : g.optionals) add_scope(b, o, id);
}

std::set<std::string> names_in(const std::vector<TriplePattern>& patterns,
                               const std::set<std::string>& pseudo) {
  std::set<std::string> out;
  for (const auto& tp : patterns) {
    for (const auto* t : {&tp.subject, &tp.object}) {
      if (t->is_variable()) out.insert("?" + t->value);
      if (t->is_uri() && pseudo.count(t->value)) out.insert("<" + t->value);
    }
  }
  return out;
}

}  // namespace

std::vector<int> Branch::subtree(int s) const {
  std::vector<int> out{s};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int c : scopes[out[i]].children) out.push_back(c);
  }
  return out;
}

std::set<std::string> Branch::own_variables(int s) const {
  return variables_of(scopes[s].patterns);
}

std::vector<Branch> expand_branches(const GraphPattern& where) {
  std::vector<Branch> out;
  for (const Flat& flat : flatten(where)) {
    Branch b;
    Scope root;
    root.patterns = flat.patterns;
    root.filters = flat.filters;
    b.scopes.push_back(std::move(root));
    for (const GraphPattern* o : flat.optionals) add_scope(b, *o, 0);
    out.push_back(std::move(b));
  }
  return out;
}

std::set<std::string> subject_constants(const Branch& branch) {
  std::set<std::string> out;
  for (const auto& s : branch.scopes) {
    for (const auto& tp : s.patterns) {
      if (tp.subject.is_uri()) out.insert(tp.subject.value);
    }
  }
  return out;
}

void check_supported(const SparqlQuery& query) {
  check_supported(query, expand_branches(query.where));
}

void check_supported(const SparqlQuery& query, const std::vector<Branch>& branches) {
  if (query.form == QueryForm::kDescribe) {
    if (!query.describe_target) throw UnsupportedFeature("DESCRIBE without a target");
    if (branches.size() > 1) throw UnsupportedFeature("DESCRIBE with UNION");
  }
  for (const Branch& b : branches) {
    std::set<std::string> all_vars;
    for (const auto& s : b.scopes) {
      for (const auto& tp : s.patterns) {
        if (tp.predicate.is_variable()) {
          throw UnsupportedFeature("variable predicate ?" + tp.predicate.value);
        }
      }
      auto v = variables_of(s.patterns);
      all_vars.insert(v.begin(), v.end());
    }
    for (std::size_t i = 0; i < b.scopes.size(); ++i) {
      auto own = b.own_variables(static_cast<int>(i));
      for (const auto& f : b.scopes[i].filters) {
        if (i > 0 && !own.count(f.variable)) {
          throw UnsupportedFeature("FILTER inside OPTIONAL on ?" + f.variable +
                                   ", which that OPTIONAL does not bind");
        }
        if (!all_vars.count(f.variable)) {
          throw UnsupportedFeature("FILTER on ?" + f.variable +
                                   ", which a UNION alternative does not bind");
        }
      }
    }

    // Shared names between an OPTIONAL subtree and the rest must be bound
    // by the group that contains the OPTIONAL.
    auto pseudo = subject_constants(b);
    for (std::size_t c = 1; c < b.scopes.size(); ++c) {
      auto inside = b.subtree(static_cast<int>(c));
      std::set<int> in_set(inside.begin(), inside.end());
      std::set<std::string> in_names, out_names;
      for (std::size_t s = 0; s < b.scopes.size(); ++s) {
        auto names = names_in(b.scopes[s].patterns, pseudo);
        (in_set.count(static_cast<int>(s)) ? in_names : out_names)
            .insert(names.begin(), names.end());
      }
      auto parent_names = names_in(b.scopes[b.scopes[c].parent].patterns, pseudo);
      for (const auto& n : in_names) {
        if (out_names.count(n) && !parent_names.count(n)) {
          std::string shown = n[0] == '?' ? n : n.substr(1);
          throw UnsupportedFeature("OPTIONAL shares " + shown +
                                   " with a sibling or ancestor group that is not its "
                                   "direct parent (not well designed)");
        }
      }
    }

    if (query.form == QueryForm::kDescribe && query.describe_target->is_variable()) {
      if (!b.own_variables(0).count(query.describe_target->value)) {
        throw UnsupportedFeature("DESCRIBE of ?" + query.describe_target->value +
                                 ", which is only bound inside OPTIONAL");
      }
    }
  }
}

}  // namespace rdfpt::sparql
