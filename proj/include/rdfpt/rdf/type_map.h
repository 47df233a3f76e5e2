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

#include <map>
#include <string>

#include "rdfpt/rdf/value.h"

namespace rdfpt::rdf {

// predicate (storage column name) -> primitive type. URI objects count as
// strings; a predicate observed with two different types becomes a string
// column. Cell values keep their own inferred kind either way.
class PredicateTypeMap {
 public:
  void observe(const std::string& predicate, ValueKind kind);
  void merge(const PredicateTypeMap& other);

  bool contains(const std::string& predicate) const {
    return types_.count(predicate) != 0;
  }
  // string for unknown predicates.
  ValueKind type_of(const std::string& predicate) const;
  const std::map<std::string, ValueKind>& entries() const { return types_; }
  std::size_t size() const { return types_.size(); }

  friend bool operator==(const PredicateTypeMap&,
                         const PredicateTypeMap&) = default;

 private:
  std::map<std::string, ValueKind> types_;
};

}  // namespace rdfpt::rdf
