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

#include "rdfpt/rdf/prefix_table.h"

#include <cctype>
#include <sstream>

#include "rdfpt/error.h"

namespace rdfpt::rdf {

bool PrefixTable::valid_label(std::string_view label) {
  if (label.empty()) return true;
  if (!std::isalpha(static_cast<unsigned char>(label[0]))) return false;
  for (char c : label) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') return false;
  }
  return true;
}

void PrefixTable::add(std::string label, std::string ns) {
  if (!valid_label(label)) {
    throw InvalidArgument("invalid prefix label '" + label + "'");
  }
  if (ns.empty()) throw InvalidArgument("empty namespace for '" + label + "'");
  for (const auto& [l, n] : entries_) {
    if (l == label) {
      if (n == ns) return;
      throw InvalidArgument("prefix '" + label + "' already bound to <" + n +
                            ">");
    }
  }
  entries_.emplace_back(std::move(label), std::move(ns));
}

std::optional<std::string> PrefixTable::namespace_of(
    std::string_view label) const {
  for (const auto& [l, n] : entries_) {
    if (l == label) return n;
  }
  return std::nullopt;
}

std::optional<std::pair<std::string, std::string>> PrefixTable::split(
    std::string_view uri) const {
  const Entry* best = nullptr;
  for (const auto& e : entries_) {
    if (uri.size() >= e.second.size() &&
        uri.compare(0, e.second.size(), e.second) == 0) {
      if (best == nullptr || e.second.size() > best->second.size()) best = &e;
    }
  }
  if (best == nullptr) return std::nullopt;
  return std::make_pair(best->first,
                        std::string(uri.substr(best->second.size())));
}

std::string PrefixTable::compress(std::string_view uri) const {
  auto parts = split(uri);
  if (!parts) return std::string(uri);
  return parts->first + "_" + parts->second;
}

std::string PrefixTable::expand(std::string_view compact) const {
  auto pos = compact.find('_');
  if (pos == std::string_view::npos) return std::string(compact);
  auto ns = namespace_of(compact.substr(0, pos));
  if (!ns) return std::string(compact);
  return *ns + std::string(compact.substr(pos + 1));
}

std::string PrefixTable::display(std::string_view uri) const {
  auto parts = split(uri);
  if (!parts) return "<" + std::string(uri) + ">";
  return parts->first + ":" + parts->second;
}

PrefixTable PrefixTable::parse_sidecar(std::istream& in) {
  PrefixTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("prefix file line " + std::to_string(lineno) +
                           ": expected label<TAB>namespace",
                       0);
    }
    std::string label = line.substr(0, tab);
    std::string ns = line.substr(tab + 1);
    if (ns.size() >= 2 && ns.front() == '<' && ns.back() == '>') {
      ns = ns.substr(1, ns.size() - 2);
    }
    table.add(label, ns);
  }
  return table;
}

std::string PrefixTable::to_sidecar() const {
  std::ostringstream out;
  for (const auto& [l, n] : entries_) out << l << '\t' << n << '\n';
  return out.str();
}

std::string compress_uri(std::string_view uri, const PrefixTable& prefixes) {
  return prefixes.compress(uri);
}

}  // namespace rdfpt::rdf
