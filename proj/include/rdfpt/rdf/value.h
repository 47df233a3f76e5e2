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
#include <optional>
#include <string>
#include <string_view>

#include "rdfpt/rdf/term.h"

namespace rdfpt::rdf {

enum class ValueKind : std::uint8_t {
  kUri = 0,
  kString = 1,
  kInteger = 2,
  kDouble = 3,
  kDecimal = 4,
  kBoolean = 5,
  kDate = 6,
};

// A typed object value. The lexical form is always kept verbatim; numeric
// operations parse it on demand.
struct Value {
  ValueKind kind = ValueKind::kString;
  std::string lexical;

  static Value uri(std::string u) { return {ValueKind::kUri, std::move(u)}; }
  static Value string(std::string s) {
    return {ValueKind::kString, std::move(s)};
  }
  static Value integer(std::int64_t v) {
    return {ValueKind::kInteger, std::to_string(v)};
  }

  bool is_numeric() const {
    return kind == ValueKind::kInteger || kind == ValueKind::kDouble ||
           kind == ValueKind::kDecimal;
  }

  friend bool operator==(const Value&, const Value&) = default;
};

struct Inferred {
  Value value;
  std::optional<std::string> warning;
};

// Maps a literal to its primitive. Plain and unknown-datatype literals are
// strings; a lexical form that does not fit its declared type falls back to
// a string and reports a warning. Language tags stay in the lexical form.
Inferred infer_primitive(const Term& literal);

// uri terms become kUri values carrying the full URI.
Value value_of(const Term& term);

// Back to an RDF term (used by DESCRIBE output and tests).
Term term_of(const Value& value);

std::string_view type_tag(ValueKind kind);
std::optional<ValueKind> kind_from_tag(std::string_view tag);

enum class CompareOp { kEq, kNe, kLt, kGt, kLe, kGe };
std::string_view op_symbol(CompareOp op);
CompareOp flip(CompareOp op);

// Canonical key under value equality: numerics of any kind compare by
// number, everything else by kind and lexical form.
std::string join_key(const Value& value);
bool values_equal(const Value& a, const Value& b);

// FILTER comparison. Ordering operators only apply within one comparable
// class (numeric, string, date, boolean); anything else is false.
bool compare_values(const Value& a, CompareOp op, const Value& b);

// Total order used by ORDER BY: null < uri < numeric < boolean < date <
// string. Returns <0, 0, >0.
int compare_for_order(const Value* a, const Value* b);

// SPARQL regex over string values; other kinds never match.
bool regex_match(const Value& value, const std::string& pattern,
                 const std::string& flags);
// Throws ParseError if the pattern does not compile.
void validate_regex(const std::string& pattern, const std::string& flags);

// Output rendering shared by the pipeline and the oracle.
std::string render(const Value& value);
std::string render(const std::optional<Value>& value);
inline constexpr std::string_view kNullText = "NULL";

long double numeric_value(const Value& value);

}  // namespace rdfpt::rdf
