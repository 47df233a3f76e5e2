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

#include "rdfpt/storage/manifest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "rdfpt/error.h"
#include "rdfpt/storage/block_file.h"

namespace rdfpt::storage {

namespace fs = std::filesystem;
using nlohmann::json;

void save_table(const PropertyTable& table, const std::string& dir) {
  if (!table.sealed()) throw InvalidArgument("only sealed tables are saved");
  fs::create_directories(dir);

  json manifest;
  manifest["format"] = 1;
  manifest["column_family"] = std::string(kColumnFamily);
  manifest["block_capacity"] = table.options().block_capacity;
  manifest["bloom_fp_rate"] = table.options().bloom_fp_rate;
  manifest["split_keys"] = table.split_keys();
  manifest["columns"] = table.columns();
  json prefixes = json::array();
  for (const auto& [label, ns] : table.prefixes().entries()) {
    prefixes.push_back({label, ns});
  }
  manifest["prefixes"] = prefixes;
  json types = json::object();
  for (const auto& [col, kind] : table.types().entries()) {
    types[col] = std::string(rdf::type_tag(kind));
  }
  manifest["types"] = types;

  json regions = json::array();
  for (std::size_t r = 0; r < table.region_count(); ++r) {
    const Region& region = table.region(r);
    std::string sub = "region-" + std::to_string(r);
    fs::create_directories(fs::path(dir) / sub);
    json files = json::array();
    for (std::size_t b = 0; b < region.blocks.size(); ++b) {
      char name[32];
      std::snprintf(name, sizeof(name), "block-%06zu.blk", b);
      std::string rel = sub + "/" + name;
      write_block_file((fs::path(dir) / rel).string(), *region.blocks[b]);
      files.push_back(rel);
    }
    json jr;
    jr["start"] = region.start;
    jr["end"] = region.end ? json(*region.end) : json(nullptr);
    jr["blocks"] = files;
    regions.push_back(jr);
  }
  manifest["regions"] = regions;
  manifest["entries"] = table.entry_count();

  std::ofstream out(fs::path(dir) / kManifestName, std::ios::trunc);
  if (!out) throw IoError("cannot write manifest in " + dir);
  out << manifest.dump(2) << '\n';
}

PropertyTable open_table(const std::string& dir) {
  std::ifstream in(fs::path(dir) / kManifestName);
  if (!in) throw IoError("no manifest in " + dir);
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw IoError("malformed manifest in " + dir + ": " + e.what());
  }
  try {
    TableOptions options;
    options.block_capacity = manifest.at("block_capacity").get<std::size_t>();
    options.bloom_fp_rate = manifest.at("bloom_fp_rate").get<double>();
    PropertyTable table = PropertyTable::create(
        manifest.at("split_keys").get<std::vector<std::string>>(), options);
    for (const auto& p : manifest.at("prefixes")) {
      table.prefixes().add(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    }
    for (const auto& [col, tag] : manifest.at("types").items()) {
      auto kind = rdf::kind_from_tag(tag.get<std::string>());
      if (!kind) throw IoError("unknown type tag in manifest: " + tag.dump());
      table.types().observe(col, *kind);
    }
    std::vector<StoreBlock> blocks;
    const auto& regions = manifest.at("regions");
    if (regions.size() != table.region_count()) {
      throw IoError("manifest region count does not match its split keys");
    }
    for (const auto& jr : regions) {
      for (const auto& file : jr.at("blocks")) {
        blocks.push_back(
            read_block_file((fs::path(dir) / file.get<std::string>()).string()));
      }
    }
    table.install_blocks(std::move(blocks));
    for (const auto& c : manifest.at("columns")) {
      table.columns().insert(c.get<std::string>());
    }
    return table;
  } catch (const json::exception& e) {
    throw IoError("malformed manifest in " + dir + ": " + e.what());
  }
}

}  // namespace rdfpt::storage
