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

#include "rdfpt/rdf/type_map.h"

namespace rdfpt::rdf {

void PredicateTypeMap::observe(const std::string& predicate, ValueKind kind) {
  if (kind == ValueKind::kUri) kind = ValueKind::kString;
  auto [it, inserted] = types_.emplace(predicate, kind);
  if (!inserted && it->second != kind) it->second = ValueKind::kString;
}

void PredicateTypeMap::merge(const PredicateTypeMap& other) {
  for (const auto& [p, k] : other.types_) observe(p, k);
}

ValueKind PredicateTypeMap::type_of(const std::string& predicate) const {
  auto it = types_.find(predicate);
  return it == types_.end() ? ValueKind::kString : it->second;
}

}  // namespace rdfpt::rdf
