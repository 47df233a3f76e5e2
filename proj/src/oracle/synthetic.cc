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

#include "rdfpt/oracle/synthetic.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rdfpt/error.h"

namespace rdfpt::oracle {

void SyntheticConfig::validate() const {
  if (!(density > 0.0 && density <= 1.0)) throw InvalidArgument("density must be in (0, 1]");
  if (multivalue_rate < 0.0 || multivalue_rate > 1.0) {
    throw InvalidArgument("multivalue rate must be in [0, 1]");
  }
  if (subjects == 0 || predicates == 0) {
    throw InvalidArgument("subjects and predicates must be >= 1");
  }
}

const DensityPreset* find_preset(std::string_view name) {
  if (name == kBsbmPreset.name) return &kBsbmPreset;
  if (name == kDbpediaPreset.name) return &kDbpediaPreset;
  return nullptr;
}

SyntheticPlan generate_synthetic(const SyntheticConfig& config, std::ostream& out) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  std::binomial_distribution<std::uint64_t> degree(config.predicates, config.density);
  std::bernoulli_distribution multi(config.multivalue_rate);
  std::uniform_int_distribution<std::uint64_t> pick_subject(0, config.subjects - 1);
  std::uniform_int_distribution<int> pick_int(0, 9999);

  const std::string base(kSyntheticBase);
  SyntheticPlan plan;
  std::vector<std::uint64_t> preds(config.predicates);
  for (std::uint64_t s = 0; s < config.subjects; ++s) {
    std::uint64_t k = std::max<std::uint64_t>(1, degree(rng));
    std::iota(preds.begin(), preds.end(), 0);
    // Partial Fisher-Yates: the first k entries are the chosen predicates.
    for (std::uint64_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::uint64_t> pick(i, config.predicates - 1);
      std::swap(preds[i], preds[pick(rng)]);
    }
    std::sort(preds.begin(), preds.begin() + static_cast<std::ptrdiff_t>(k));
    std::uint64_t triples = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
      std::uint64_t p = preds[i];
      int values = multi(rng) ? 2 : 1;
      for (int v = 0; v < values; ++v) {
        out << '<' << base << 's' << s << "> <" << base << 'p' << p << "> ";
        switch (p % 3) {
          case 0: out << '<' << base << 's' << pick_subject(rng) << '>'; break;
          case 1:
            out << '"' << pick_int(rng) << "\"^^<http://www.w3.org/2001/XMLSchema#integer>";
            break;
          default: out << "\"v" << pick_int(rng) << '"'; break;
        }
        out << " .\n";
        ++triples;
      }
    }
    plan.triples += triples;
    plan.filled_cells += k;
    ++plan.degree_histogram[triples];
  }
  return plan;
}

}  // namespace rdfpt::oracle
