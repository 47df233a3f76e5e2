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
#include <string>
#include <string_view>
#include <vector>

namespace rdfpt::storage {

inline constexpr double kDefaultBloomFpRate = 0.01;

// Classic bloom filter with Kirsch-Mitzenmacher double hashing over
// FNV-1a and MurmurHash64A.
class BloomFilter {
 public:
  BloomFilter() = default;
  BloomFilter(std::uint64_t bits, std::uint32_t hashes);

  // m = ceil(-n ln p / (ln 2)^2), k = round(m/n ln 2), both at least 1.
  static BloomFilter for_capacity(std::size_t expected_keys, double fp_rate);
  static BloomFilter from_words(std::uint64_t bits, std::uint32_t hashes,
                                std::vector<std::uint64_t> words);

  void add(std::string_view key);
  bool may_contain(std::string_view key) const;

  std::uint64_t bits() const { return bits_; }
  std::uint32_t hashes() const { return hashes_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BloomFilter&, const BloomFilter&) = default;

 private:
  std::uint64_t bits_ = 0;
  std::uint32_t hashes_ = 0;
  std::vector<std::uint64_t> words_;
};

// The rowcol key: row bytes, a NUL separator, column bytes.
std::string bloom_key(std::string_view row, std::string_view column);

}  // namespace rdfpt::storage
