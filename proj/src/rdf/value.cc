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

#include "rdfpt/rdf/value.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <unordered_map>

#include "rdfpt/error.h"

namespace rdfpt::rdf {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::size_t skip_digits(std::string_view s, std::size_t i) {
  while (i < s.size() && is_digit(s[i])) ++i;
  return i;
}

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t j = skip_digits(s, i);
  if (j == i || j != s.size()) return false;
  std::string_view digits = s.substr(s[0] == '+' ? 1 : 0);
  std::int64_t v;
  auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  return res.ec == std::errc() && res.ptr == digits.data() + digits.size();
}

// [+-]? (digits ('.' digits?)? | '.' digits)
std::size_t scan_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t int_end = skip_digits(s, i);
  bool int_digits = int_end > i;
  i = int_end;
  bool frac_digits = false;
  if (i < s.size() && s[i] == '.') {
    std::size_t f = skip_digits(s, i + 1);
    frac_digits = f > i + 1;
    i = f;
  }
  if (!int_digits && !frac_digits) return std::string_view::npos;
  return i;
}

bool valid_decimal(std::string_view s) { return scan_decimal(s) == s.size(); }

bool valid_double(std::string_view s) {
  if (s == "INF" || s == "+INF" || s == "-INF" || s == "NaN") return true;
  std::size_t i = scan_decimal(s);
  if (i == std::string_view::npos) return false;
  if (i == s.size()) return true;
  if (s[i] != 'e' && s[i] != 'E') return false;
  ++i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t j = skip_digits(s, i);
  return j > i && j == s.size();
}

bool valid_boolean(std::string_view s) {
  return s == "true" || s == "false" || s == "1" || s == "0";
}

bool valid_date(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t y = skip_digits(s, i);
  if (y - i < 4 || y + 6 > s.size()) return false;
  if (s[y] != '-' || !is_digit(s[y + 1]) || !is_digit(s[y + 2]) ||
      s[y + 3] != '-' || !is_digit(s[y + 4]) || !is_digit(s[y + 5])) {
    return false;
  }
  int month = (s[y + 1] - '0') * 10 + (s[y + 2] - '0');
  int day = (s[y + 4] - '0') * 10 + (s[y + 5] - '0');
  if (month < 1 || month > 12 || day < 1 || day > 31) return false;
  std::string_view tz = s.substr(y + 6);
  if (tz.empty() || tz == "Z") return true;
  return tz.size() == 6 && (tz[0] == '+' || tz[0] == '-') && is_digit(tz[1]) &&
         is_digit(tz[2]) && tz[3] == ':' && is_digit(tz[4]) && is_digit(tz[5]);
}

enum class Declared { kString, kInteger, kDouble, kDecimal, kBoolean, kDate,
                      kOther };

Declared declared_type(std::string_view datatype) {
  if (datatype.empty()) return Declared::kString;
  if (datatype.substr(0, kXsd.size()) != kXsd) return Declared::kOther;
  std::string_view local = datatype.substr(kXsd.size());
  if (local == "string") return Declared::kString;
  if (local == "integer" || local == "int" || local == "long" ||
      local == "short" || local == "byte" || local == "nonNegativeInteger" ||
      local == "positiveInteger" || local == "negativeInteger" ||
      local == "nonPositiveInteger" || local == "unsignedInt" ||
      local == "unsignedLong" || local == "unsignedShort") {
    return Declared::kInteger;
  }
  if (local == "double" || local == "float") return Declared::kDouble;
  if (local == "decimal") return Declared::kDecimal;
  if (local == "boolean") return Declared::kBoolean;
  if (local == "date") return Declared::kDate;
  return Declared::kOther;
}

bool canonical_small_integer(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  std::size_t n = s.size() - i;
  if (n == 0 || n > 18) return false;
  if (s[i] == '0') return n == 1 && i == 0;
  return skip_digits(s, i) == s.size();
}

std::string canonical_number(long double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.21Lg", v);
  return buf;
}

bool as_bool(const Value& v) {
  return v.lexical == "true" || v.lexical == "1";
}

int comparable_class(ValueKind k) {
  switch (k) {
    case ValueKind::kUri: return 0;
    case ValueKind::kInteger:
    case ValueKind::kDouble:
    case ValueKind::kDecimal: return 1;
    case ValueKind::kBoolean: return 2;
    case ValueKind::kDate: return 3;
    case ValueKind::kString: return 4;
  }
  return 4;
}

int three_way(long double a, long double b) {
  bool na = std::isnan(a), nb = std::isnan(b);
  if (na || nb) return na == nb ? 0 : (na ? -1 : 1);
  return a < b ? -1 : (a > b ? 1 : 0);
}

int three_way(std::string_view a, std::string_view b) {
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

const std::regex& compiled(const std::string& pattern,
                           const std::string& flags) {
  thread_local std::unordered_map<std::string, std::regex> cache;
  std::string key = flags + '\n' + pattern;
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto syntax = std::regex::ECMAScript;
  if (flags.find('i') != std::string::npos) syntax |= std::regex::icase;
  return cache.emplace(key, std::regex(pattern, syntax)).first->second;
}

}  // namespace

Inferred infer_primitive(const Term& literal) {
  if (!literal.lang.empty()) {
    return {Value::string(literal.value + "@" + literal.lang), std::nullopt};
  }
  const std::string& lex = literal.value;
  auto fallback = [&](std::string_view type) {
    return Inferred{Value::string(lex),
                    "lexical form \"" + lex + "\" is not a valid xsd:" +
                        std::string(type) + "; stored as string"};
  };
  switch (declared_type(literal.datatype)) {
    case Declared::kString:
    case Declared::kOther:
      return {Value::string(lex), std::nullopt};
    case Declared::kInteger:
      if (!valid_integer(lex)) return fallback("integer");
      return {{ValueKind::kInteger, lex}, std::nullopt};
    case Declared::kDouble:
      if (!valid_double(lex)) return fallback("double");
      return {{ValueKind::kDouble, lex}, std::nullopt};
    case Declared::kDecimal:
      if (!valid_decimal(lex)) return fallback("decimal");
      return {{ValueKind::kDecimal, lex}, std::nullopt};
    case Declared::kBoolean:
      if (!valid_boolean(lex)) return fallback("boolean");
      return {{ValueKind::kBoolean, lex}, std::nullopt};
    case Declared::kDate:
      if (!valid_date(lex)) return fallback("date");
      return {{ValueKind::kDate, lex}, std::nullopt};
  }
  return {Value::string(lex), std::nullopt};
}

Value value_of(const Term& term) {
  if (term.is_uri()) return Value::uri(term.value);
  return infer_primitive(term).value;
}

Term term_of(const Value& value) {
  switch (value.kind) {
    case ValueKind::kUri: return Term::uri(value.lexical);
    case ValueKind::kString: return Term::literal(value.lexical);
    case ValueKind::kInteger: return Term::literal(value.lexical, xsd("integer"));
    case ValueKind::kDouble: return Term::literal(value.lexical, xsd("double"));
    case ValueKind::kDecimal: return Term::literal(value.lexical, xsd("decimal"));
    case ValueKind::kBoolean: return Term::literal(value.lexical, xsd("boolean"));
    case ValueKind::kDate: return Term::literal(value.lexical, xsd("date"));
  }
  return Term::literal(value.lexical);
}

std::string_view type_tag(ValueKind kind) {
  switch (kind) {
    case ValueKind::kUri: return "uri";
    case ValueKind::kString: return "string";
    case ValueKind::kInteger: return "integer";
    case ValueKind::kDouble: return "double";
    case ValueKind::kDecimal: return "decimal";
    case ValueKind::kBoolean: return "boolean";
    case ValueKind::kDate: return "date";
  }
  return "string";
}

std::optional<ValueKind> kind_from_tag(std::string_view tag) {
  for (auto k : {ValueKind::kUri, ValueKind::kString, ValueKind::kInteger,
                 ValueKind::kDouble, ValueKind::kDecimal, ValueKind::kBoolean,
                 ValueKind::kDate}) {
    if (type_tag(k) == tag) return k;
  }
  return std::nullopt;
}

std::string_view op_symbol(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNe: return "!=";
    case CompareOp::kLt: return "<";
    case CompareOp::kGt: return ">";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGe: return ">=";
  }
  return "=";
}

CompareOp flip(CompareOp op) {
  switch (op) {
    case CompareOp::kLt: return CompareOp::kGt;
    case CompareOp::kGt: return CompareOp::kLt;
    case CompareOp::kLe: return CompareOp::kGe;
    case CompareOp::kGe: return CompareOp::kLe;
    default: return op;
  }
}

long double numeric_value(const Value& value) {
  const std::string& s = value.lexical;
  if (s == "INF" || s == "+INF") return HUGE_VALL;
  if (s == "-INF") return -HUGE_VALL;
  if (s == "NaN") return NAN;
  return std::strtold(s.c_str(), nullptr);
}

std::string join_key(const Value& value) {
  switch (value.kind) {
    case ValueKind::kUri: return "u:" + value.lexical;
    case ValueKind::kString: return "s:" + value.lexical;
    case ValueKind::kDate: return "d:" + value.lexical;
    case ValueKind::kBoolean: return as_bool(value) ? "b:true" : "b:false";
    case ValueKind::kInteger:
      if (canonical_small_integer(value.lexical)) return "n:" + value.lexical;
      [[fallthrough]];
    case ValueKind::kDouble:
    case ValueKind::kDecimal:
      return "n:" + canonical_number(numeric_value(value));
  }
  return "s:" + value.lexical;
}

bool values_equal(const Value& a, const Value& b) {
  if (a.kind == b.kind && a.lexical == b.lexical) return true;
  if (a.is_numeric() != b.is_numeric()) return false;
  if (!a.is_numeric() && a.kind != b.kind) return false;
  return join_key(a) == join_key(b);
}

bool compare_values(const Value& a, CompareOp op, const Value& b) {
  if (op == CompareOp::kEq) return values_equal(a, b);
  if (op == CompareOp::kNe) return !values_equal(a, b);
  int ca = comparable_class(a.kind);
  if (ca == 0 || ca != comparable_class(b.kind)) return false;
  int c = 0;
  if (ca == 1) {
    long double x = numeric_value(a), y = numeric_value(b);
    if (std::isnan(x) || std::isnan(y)) return false;
    c = x < y ? -1 : (x > y ? 1 : 0);
  } else if (ca == 2) {
    c = static_cast<int>(as_bool(a)) - static_cast<int>(as_bool(b));
  } else {
    c = three_way(a.lexical, b.lexical);
  }
  switch (op) {
    case CompareOp::kLt: return c < 0;
    case CompareOp::kGt: return c > 0;
    case CompareOp::kLe: return c <= 0;
    case CompareOp::kGe: return c >= 0;
    default: return false;
  }
}

int compare_for_order(const Value* a, const Value* b) {
  if (a == nullptr || b == nullptr) {
    return (a == nullptr) == (b == nullptr) ? 0 : (a == nullptr ? -1 : 1);
  }
  int ra = comparable_class(a->kind), rb = comparable_class(b->kind);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (ra) {
    case 1: return three_way(numeric_value(*a), numeric_value(*b));
    case 2: return static_cast<int>(as_bool(*a)) - static_cast<int>(as_bool(*b));
    default: return three_way(a->lexical, b->lexical);
  }
}

void validate_regex(const std::string& pattern, const std::string& flags) {
  for (char f : flags) {
    if (f != 'i') {
      throw UnsupportedFeature(std::string("regex flag '") + f + "'");
    }
  }
  try {
    compiled(pattern, flags);
  } catch (const std::regex_error& e) {
    throw ParseError("invalid regular expression /" + pattern + "/", 0);
  }
}

bool regex_match(const Value& value, const std::string& pattern,
                 const std::string& flags) {
  if (value.kind != ValueKind::kString) return false;
  return std::regex_search(value.lexical, compiled(pattern, flags));
}

std::string render(const Value& value) {
  switch (value.kind) {
    case ValueKind::kUri: return "<" + value.lexical + ">";
    case ValueKind::kString: return "\"" + escape_literal(value.lexical) + "\"";
    case ValueKind::kDate: return "\"" + value.lexical + "\"^^xsd:date";
    default: return value.lexical;
  }
}

std::string render(const std::optional<Value>& value) {
  return value ? render(*value) : std::string(kNullText);
}

}  // namespace rdfpt::rdf
