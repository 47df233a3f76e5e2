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

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rdfpt::rdf {

// Ordered (label, namespace) pairs. Labels match [A-Za-z][A-Za-z0-9-]* (or
// are empty for the default prefix) so that "label_local" splits at the
// first underscore without ambiguity.
class PrefixTable {
 public:
  using Entry = std::pair<std::string, std::string>;

  static bool valid_label(std::string_view label);

  // Throws InvalidArgument for a malformed label or a label already bound
  // to a different namespace. Re-adding an identical pair is a no-op.
  void add(std::string label, std::string ns);

  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::optional<std::string> namespace_of(std::string_view label) const;

  // Longest registered namespace that prefixes `uri`.
  std::optional<std::pair<std::string, std::string>> split(
      std::string_view uri) const;

  std::string compress(std::string_view uri) const;
  std::string expand(std::string_view compact) const;
  // "label:local" when a namespace matches, otherwise "<uri>".
  std::string display(std::string_view uri) const;

  // Sidecar format: one `label<TAB>namespace` per line, '#' comments.
  static PrefixTable parse_sidecar(std::istream& in);
  std::string to_sidecar() const;

  friend bool operator==(const PrefixTable&, const PrefixTable&) = default;

 private:
  std::vector<Entry> entries_;
};

std::string compress_uri(std::string_view uri, const PrefixTable& prefixes);

}  // namespace rdfpt::rdf
