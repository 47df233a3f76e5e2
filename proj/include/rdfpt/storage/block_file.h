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

#include <string>

#include "rdfpt/storage/store_block.h"

namespace rdfpt::storage {

// On-disk layout of one sealed block:
//
//   record*   varint keylen | key | varint vallen | value
//             key   = varint rowlen | row | varint collen | col | fixed64 ts
//             value = u8 kind | lexical bytes
//   trailer   first key | last key | varint entries | varint k | varint m |
//             fixed64 words...
//   footer    fixed64 trailer offset | fixed32 magic "RDPT"
//
// Fixed-width integers are big-endian.
std::string encode_block(const StoreBlock& block);
StoreBlock decode_block(const std::string& bytes);

void write_block_file(const std::string& path, const StoreBlock& block);
StoreBlock read_block_file(const std::string& path);

}  // namespace rdfpt::storage
