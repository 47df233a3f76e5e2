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
#include <map>
#include <ostream>
#include <string>

namespace rdfpt::oracle {

inline constexpr std::string_view kSyntheticBase = "http://example.org/";

struct SyntheticConfig {
  std::uint64_t subjects = 1000;
  std::uint64_t predicates = 40;
  double density = 0.28;          // expected share of filled (subject, predicate) cells
  double multivalue_rate = 0.0;   // chance that a filled cell gets a second value
  std::uint64_t seed = 42;

  void validate() const;  // InvalidArgument unless density in (0,1] etc.
};

struct DensityPreset {
  std::string_view name;
  std::uint64_t predicates;
  double density;
};

// Column-fill rates of the two reference datasets.
inline constexpr DensityPreset kBsbmPreset{"bsbm", 40, 0.28};
inline constexpr DensityPreset kDbpediaPreset{"dbpedia", 2500, 0.004};
const DensityPreset* find_preset(std::string_view name);

// What the generator wrote, for checking loaders and analytics against.
struct SyntheticPlan {
  std::uint64_t triples = 0;
  std::uint64_t filled_cells = 0;                       // distinct (s, p)
  std::map<std::uint64_t, std::uint64_t> degree_histogram;  // triples per subject
  double fill_fraction(const SyntheticConfig& c) const {
    return static_cast<double>(filled_cells) /
           (static_cast<double>(c.subjects) * static_cast<double>(c.predicates));
  }
};

// Each subject fills Binomial(predicates, density) distinct predicates
// (at least one). Predicate j carries links to other subjects (j % 3 == 0),
// integers (1) or strings (2). Same config, same bytes.
SyntheticPlan generate_synthetic(const SyntheticConfig& config, std::ostream& out);

}  // namespace rdfpt::oracle
