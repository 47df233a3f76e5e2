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
#include <string>
#include <vector>

#include "rdfpt/mr/engine.h"

namespace rdfpt::oracle {

// The classic example job: map emits (word, 1) per whitespace-separated
// token, reduce sums. One split per document.
std::map<std::string, std::uint64_t> word_count(const std::vector<std::string>& documents,
                                                std::size_t parallelism = 1,
                                                std::size_t reducers = 1,
                                                mr::JobMetrics* metrics = nullptr);

}  // namespace rdfpt::oracle
