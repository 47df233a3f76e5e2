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
#include <string_view>

namespace rdfpt {

// 64-bit FNV-1a. Stable across platforms and runs.
std::uint64_t fnv1a64(std::string_view bytes);

// MurmurHash64A with a fixed seed; used as the second, independent hash for
// bloom filter double hashing.
std::uint64_t murmur64(std::string_view bytes, std::uint64_t seed = 0x9747b28c);

}  // namespace rdfpt
