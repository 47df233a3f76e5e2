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
#include <string_view>
#include <vector>

namespace rdfpt::sparql {

enum class TokenKind {
  kIri,          // <...>, text without brackets
  kPrefixedName, // label:local
  kVariable,     // ?x / $x, text without sigil
  kPlaceholder,  // %Name%, text with the percent signs
  kString,       // unescaped contents
  kLangTag,      // @en, text without '@'
  kInteger,
  kDecimal,
  kDouble,
  kKeyword,      // upper-cased bare word (SELECT, a, TRUE, REGEX, ...)
  kPunct,        // { } ( ) . , ; * ^^ = != < > <= >= ! && || and others
  kBlankNode,    // _:x or [
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  std::size_t offset = 0;
};

// Splits SPARQL text into tokens; '#' starts a comment outside IRIs and
// strings. Throws ParseError on unterminated strings or stray characters.
std::vector<Token> tokenize(std::string_view text);

}  // namespace rdfpt::sparql
