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

#include "rdfpt/sql/regex_translate.h"

#include <string_view>
#include <vector>

namespace rdfpt::sql {

namespace {

constexpr std::string_view kMeta = ".[]()*+?{}|\\^$";

bool is_meta(char c) { return kMeta.find(c) != std::string_view::npos; }

std::string escape_like(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '%' || c == '_' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

LikeTranslation translate_regex(const std::string& pattern, const std::string& flags) {
  std::string_view body = pattern;
  bool head = !body.empty() && body.front() == '^';
  if (head) body.remove_prefix(1);
  bool tail = !body.empty() && body.back() == '$' &&
              (body.size() < 2 || body[body.size() - 2] != '\\');
  if (tail) body.remove_suffix(1);

  bool plain = flags.find('i') == std::string::npos;
  for (char c : body) {
    if (is_meta(c)) plain = false;
  }
  if (plain) {
    std::string lit = escape_like(body);
    return {(head ? "" : "%") + lit + (tail ? "" : "%"), false};
  }

  LikeTranslation out{"%", true};
  if (flags.find('i') != std::string::npos) return out;
  if (pattern.find('|') != std::string::npos) return out;
  std::string prefix;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (is_meta(c)) {
      if ((c == '*' || c == '?' || c == '{') && !prefix.empty()) prefix.pop_back();
      break;
    }
    prefix += c;
  }
  if (prefix.empty()) return out;
  out.like = (head ? "" : "%") + escape_like(prefix) + "%";
  return out;
}

bool like_match(const std::string& text, const std::string& like) {
  // Tokenize into (char, is_wildcard) then classic two-pointer matching.
  struct Tok {
    char c;
    char kind;  // 'c' literal, '%' any run, '_' any one
  };
  std::vector<Tok> toks;
  for (std::size_t i = 0; i < like.size(); ++i) {
    if (like[i] == '\\' && i + 1 < like.size()) {
      toks.push_back({like[++i], 'c'});
    } else if (like[i] == '%' || like[i] == '_') {
      toks.push_back({like[i], like[i]});
    } else {
      toks.push_back({like[i], 'c'});
    }
  }
  std::size_t t = 0, p = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < toks.size() && (toks[p].kind == '_' ||
                            (toks[p].kind == 'c' && toks[p].c == text[t]))) {
      ++t;
      ++p;
    } else if (p < toks.size() && toks[p].kind == '%') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < toks.size() && toks[p].kind == '%') ++p;
  return p == toks.size();
}

}  // namespace rdfpt::sql
