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

namespace rdfpt::sql {

struct LikeTranslation {
  std::string like;       // LIKE pattern, '\' escapes % and _
  bool residual = false;  // LIKE is only a prefilter; the regex still applies
};

// ^abc -> abc%, abc$ -> %abc, abc -> %abc%. Patterns using classes,
// alternation, repetition, escapes or the i flag are residual and keep only
// their literal prefix.
LikeTranslation translate_regex(const std::string& pattern, const std::string& flags);

// Matches a LIKE pattern (% and _ wildcards, '\' escape) against text.
bool like_match(const std::string& text, const std::string& like);

}  // namespace rdfpt::sql
