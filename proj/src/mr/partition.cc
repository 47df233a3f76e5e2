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

#include "rdfpt/hash.h"
#include "rdfpt/mr/engine.h"

namespace rdfpt::mr {

std::size_t default_partition(std::string_view key, std::size_t reducers) {
  if (reducers == 0) throw InvalidArgument("reducer count must be >= 1");
  return static_cast<std::size_t>(fnv1a64(key) % reducers);
}

}  // namespace rdfpt::mr
