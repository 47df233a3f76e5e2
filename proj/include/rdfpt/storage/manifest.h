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

#include "rdfpt/storage/property_table.h"

namespace rdfpt::storage {

inline constexpr std::string_view kManifestName = "manifest.json";

// Writes one block file per block under <dir>/region-<i>/ plus
// <dir>/manifest.json (split keys, regions, block files, columns, type map,
// prefixes, options). The table must be sealed.
void save_table(const PropertyTable& table, const std::string& dir);

// Reopens a saved table; the result is sealed and read-only.
PropertyTable open_table(const std::string& dir);

}  // namespace rdfpt::storage
