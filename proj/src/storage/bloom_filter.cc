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

#include "rdfpt/storage/bloom_filter.h"

#include <algorithm>
#include <cmath>

#include "rdfpt/error.h"
#include "rdfpt/hash.h"

namespace rdfpt::storage {

BloomFilter::BloomFilter(std::uint64_t bits, std::uint32_t hashes)
    : bits_(bits), hashes_(hashes), words_((bits + 63) / 64, 0) {
  if (bits == 0 || hashes == 0) {
    throw InvalidArgument("bloom filter needs at least one bit and one hash");
  }
}

BloomFilter BloomFilter::for_capacity(std::size_t expected_keys,
                                      double fp_rate) {
  if (!(fp_rate > 0.0 && fp_rate < 1.0)) {
    throw InvalidArgument("bloom false-positive rate must be in (0,1)");
  }
  double n = static_cast<double>(std::max<std::size_t>(expected_keys, 1));
  double ln2 = std::log(2.0);
  auto m = static_cast<std::uint64_t>(std::ceil(-n * std::log(fp_rate) /
                                                (ln2 * ln2)));
  m = std::max<std::uint64_t>(m, 64);
  auto k = static_cast<std::uint32_t>(
      std::lround(static_cast<double>(m) / n * ln2));
  return BloomFilter(m, std::max<std::uint32_t>(k, 1));
}

BloomFilter BloomFilter::from_words(std::uint64_t bits, std::uint32_t hashes,
                                    std::vector<std::uint64_t> words) {
  BloomFilter f(bits, hashes);
  if (words.size() != f.words_.size()) {
    throw InvalidArgument("bloom filter word count does not match bit count");
  }
  f.words_ = std::move(words);
  return f;
}

void BloomFilter::add(std::string_view key) {
  std::uint64_t h1 = fnv1a64(key);
  std::uint64_t h2 = murmur64(key) | 1;
  for (std::uint32_t i = 0; i < hashes_; ++i) {
    std::uint64_t bit = (h1 + i * h2) % bits_;
    words_[bit / 64] |= std::uint64_t(1) << (bit % 64);
  }
}

bool BloomFilter::may_contain(std::string_view key) const {
  if (bits_ == 0) return false;
  std::uint64_t h1 = fnv1a64(key);
  std::uint64_t h2 = murmur64(key) | 1;
  for (std::uint32_t i = 0; i < hashes_; ++i) {
    std::uint64_t bit = (h1 + i * h2) % bits_;
    if ((words_[bit / 64] & (std::uint64_t(1) << (bit % 64))) == 0) {
      return false;
    }
  }
  return true;
}

std::string bloom_key(std::string_view row, std::string_view column) {
  std::string key;
  key.reserve(row.size() + column.size() + 1);
  key.append(row);
  key.push_back('\0');
  key.append(column);
  return key;
}

}  // namespace rdfpt::storage
