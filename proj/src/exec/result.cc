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

#include "rdfpt/exec/result.h"

#include <algorithm>

#include "json.hpp"

namespace rdfpt::exec {

std::string ResultSet::to_tsv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += '\t';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r.cells);
  return out;
}

StageMetrics ExecMetrics::totals() const {
  StageMetrics t;
  t.name = "total";
  t.kind = "total";
  for (const auto& s : stages) {
    t.shuffled_records += s.shuffled_records;
    t.shuffled_bytes += s.shuffled_bytes;
    t.blocks_read += s.blocks_read;
    t.blocks_skipped += s.blocks_skipped;
    t.cells_read += s.cells_read;
  }
  if (!stages.empty()) t.records_out = stages.back().records_out;
  return t;
}

namespace {

nlohmann::ordered_json to_json(const StageMetrics& s, const char* type) {
  nlohmann::ordered_json j;
  j["type"] = type;
  if (std::string(type) == "stage") {
    j["stage"] = "Stage-" + std::to_string(s.id);
    j["name"] = s.name;
    j["kind"] = s.kind;
    j["records_in"] = s.records_in;
  }
  j["records_out"] = s.records_out;
  j["shuffled_records"] = s.shuffled_records;
  j["shuffled_bytes"] = s.shuffled_bytes;
  j["blocks_read"] = s.blocks_read;
  j["blocks_skipped"] = s.blocks_skipped;
  j["cells_read"] = s.cells_read;
  return j;
}

}  // namespace

std::string ExecMetrics::to_jsonl() const {
  std::string out;
  for (const auto& s : stages) out += to_json(s, "stage").dump() + "\n";
  out += to_json(totals(), "total").dump() + "\n";
  return out;
}

std::string render_list(const std::vector<rdf::Value>& values) {
  if (values.empty()) return std::string(rdf::kNullText);
  std::vector<std::string> shown;
  for (const auto& v : values) shown.push_back(rdf::render(v));
  std::sort(shown.begin(), shown.end());
  std::string out = "[";
  for (std::size_t i = 0; i < shown.size(); ++i) out += (i ? ", " : "") + shown[i];
  return out + "]";
}

}  // namespace rdfpt::exec
