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

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "rdfpt/sparql/query.h"

namespace rdfpt::sparql {

inline constexpr std::size_t kMaxBranches = 64;

// A group after union expansion: required patterns plus OPTIONAL children.
struct Scope {
  int parent = -1;
  int depth = 0;
  std::vector<TriplePattern> patterns;
  std::vector<Filter> filters;
  std::vector<int> children;
};

// One union-free alternative of the WHERE clause. scopes[0] is the root;
// scopes are numbered in pre-order, each group before its OPTIONALs.
struct Branch {
  std::vector<Scope> scopes;

  // Scope ids of `s` and everything nested inside it.
  std::vector<int> subtree(int s) const;
  std::set<std::string> own_variables(int s) const;
};

// Expands UNION into its alternatives (distributing over the enclosing
// group). Throws UnsupportedFeature for a UNION inside an OPTIONAL, an
// empty OPTIONAL, or more than kMaxBranches alternatives.
std::vector<Branch> expand_branches(const GraphPattern& where);

// The shared restrictions of the supported subset, checked per branch:
// constant predicates; FILTERs inside an OPTIONAL only use that group's
// own variables; every FILTER variable occurs in the branch; variables
// shared between an OPTIONAL subtree and the rest of the query also occur
// in the group that directly contains the OPTIONAL; DESCRIBE has a single
// target bound by the required root patterns and no UNION.
void check_supported(const SparqlQuery& query);
void check_supported(const SparqlQuery& query, const std::vector<Branch>& branches);

// URIs used as a subject somewhere in the branch. They act as join points,
// so the checks above treat them like variables.
std::set<std::string> subject_constants(const Branch& branch);

}  // namespace rdfpt::sparql
