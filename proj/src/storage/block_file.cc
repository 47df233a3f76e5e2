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

#include "rdfpt/storage/block_file.h"

#include <fstream>
#include <iterator>

#include "rdfpt/error.h"

namespace rdfpt::storage {
namespace {

constexpr std::uint32_t kMagic = 0x52445054;  // "RDPT"

void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7F) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

void put_fixed(std::string& out, std::uint64_t v, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

void put_bytes(std::string& out, std::string_view s) {
  put_varint(out, s.size());
  out.append(s);
}

std::string encode_key(const CellKey& key) {
  std::string out;
  put_bytes(out, key.row);
  put_bytes(out, key.column);
  put_fixed(out, key.timestamp, 8);
  return out;
}

class Reader {
 public:
  Reader(const std::string& s, std::size_t pos, std::size_t end)
      : s_(s), pos_(pos), end_(end) {}

  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      need(1);
      auto b = static_cast<unsigned char>(s_[pos_++]);
      v |= std::uint64_t(b & 0x7F) << shift;
      if ((b & 0x80) == 0) return v;
    }
    throw IoError("corrupt block file: varint too long");
  }

  std::uint64_t fixed(int bytes) {
    need(bytes);
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) {
      v = (v << 8) | static_cast<unsigned char>(s_[pos_++]);
    }
    return v;
  }

  std::string bytes() {
    std::uint64_t n = varint();
    need(n);
    std::string out = s_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  CellKey key() {
    CellKey k;
    k.row = bytes();
    k.column = bytes();
    k.timestamp = fixed(8);
    return k;
  }

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= end_; }

 private:
  void need(std::uint64_t n) const {
    if (pos_ + n > end_) throw IoError("corrupt block file: truncated");
  }

  const std::string& s_;
  std::size_t pos_;
  std::size_t end_;
};

}  // namespace

std::string encode_block(const StoreBlock& block) {
  if (!block.sealed()) throw InvalidArgument("only sealed blocks are written");
  std::string out;
  for (const Cell& cell : block.cells()) {
    put_bytes(out, encode_key(cell.key));
    std::string value;
    value.push_back(static_cast<char>(cell.value.kind));
    value += cell.value.lexical;
    put_bytes(out, value);
  }
  std::uint64_t trailer = out.size();
  CellKey empty;
  put_bytes(out, encode_key(block.empty() ? empty : block.first_key()));
  put_bytes(out, encode_key(block.empty() ? empty : block.last_key()));
  put_varint(out, block.size());
  put_varint(out, block.bloom().hashes());
  put_varint(out, block.bloom().bits());
  for (std::uint64_t w : block.bloom().words()) put_fixed(out, w, 8);
  put_fixed(out, trailer, 8);
  put_fixed(out, kMagic, 4);
  return out;
}

StoreBlock decode_block(const std::string& bytes) {
  if (bytes.size() < 12) throw IoError("block file too short");
  Reader footer(bytes, bytes.size() - 12, bytes.size());
  std::uint64_t trailer = footer.fixed(8);
  if (footer.fixed(4) != kMagic) throw IoError("bad block file magic");
  if (trailer > bytes.size() - 12) throw IoError("bad trailer offset");

  std::vector<Cell> cells;
  Reader records(bytes, 0, trailer);
  while (!records.done()) {
    std::string key = records.bytes();
    std::string value = records.bytes();
    Reader kr(key, 0, key.size());
    Cell cell;
    cell.key = kr.key();
    if (value.empty() || static_cast<unsigned char>(value[0]) > 6) {
      throw IoError("corrupt block file: bad value kind");
    }
    cell.value.kind = static_cast<rdf::ValueKind>(value[0]);
    cell.value.lexical = value.substr(1);
    cells.push_back(std::move(cell));
  }

  Reader tr(bytes, trailer, bytes.size() - 12);
  std::string first = tr.bytes();
  std::string last = tr.bytes();
  if (!cells.empty() && (first != encode_key(cells.front().key) ||
                         last != encode_key(cells.back().key))) {
    throw IoError("block trailer keys do not match its records");
  }
  std::uint64_t entries = tr.varint();
  if (entries != cells.size()) throw IoError("block entry count mismatch");
  auto k = static_cast<std::uint32_t>(tr.varint());
  std::uint64_t m = tr.varint();
  std::vector<std::uint64_t> words((m + 63) / 64);
  for (auto& w : words) w = tr.fixed(8);
  return StoreBlock::from_parts(std::move(cells),
                                BloomFilter::from_words(m, k, std::move(words)));
}

void write_block_file(const std::string& path, const StoreBlock& block) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  std::string bytes = encode_block(block);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path);
}

StoreBlock read_block_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return decode_block(bytes);
}

}  // namespace rdfpt::storage
