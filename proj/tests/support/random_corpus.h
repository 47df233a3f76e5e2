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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rdfpt/rdf/prefix_table.h"

namespace rdfpt::testing {

inline constexpr const char* kExampleNs = "http://example.org/";

enum class ObjectKind { kLink, kInteger, kString, kDate };

struct RandomDataset {
  std::vector<ObjectKind> predicate_kinds;  // p0, p1, ...
  std::size_t subjects = 0;                 // s0, s1, ...
  std::string ntriples;
  std::size_t triples = 0;
  rdf::PrefixTable prefixes;  // ex -> kExampleNs
};

struct DatasetLimits {
  std::size_t max_triples = 1000;
  std::size_t max_predicates = 15;
  std::size_t max_subjects = 60;
};

RandomDataset random_dataset(std::mt19937_64& rng, const DatasetLimits& limits = {});

struct QueryLimits {
  std::size_t max_patterns = 4;
  double optional_rate = 0.45;
  double union_rate = 0.2;
  double filter_rate = 0.5;
  double describe_rate = 0.05;
};

// A random query over the dataset's vocabulary within the supported
// subset: constant predicates, connected groups, OPTIONALs that only share
// variables with their enclosing group.
std::string random_query(std::mt19937_64& rng, const RandomDataset& data,
                         const QueryLimits& limits = {});

}  // namespace rdfpt::testing
