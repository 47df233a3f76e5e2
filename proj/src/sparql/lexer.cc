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

#include "rdfpt/sparql/lexer.h"

#include <cctype>

#include "rdfpt/error.h"
#include "rdfpt/rdf/ntriples.h"

namespace rdfpt::sparql {

namespace {

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool name_char(char c) {
  return name_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '-';
}

// IRIREF excludes whitespace and <>"{}|^`\ inside the brackets.
std::size_t match_iri(std::string_view s, std::size_t i) {
  std::size_t j = i + 1;
  while (j < s.size()) {
    char c = s[j];
    if (c == '>') return j + 1;
    if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' ||
        c == '{' || c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      return 0;
    }
    ++j;
  }
  return 0;
}

}  // namespace

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](TokenKind k, std::string text, std::size_t at) {
    out.push_back({k, std::move(text), at});
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '<') {
      if (std::size_t end = match_iri(s, i)) {
        push(TokenKind::kIri, std::string(s.substr(i + 1, end - i - 2)), start);
        i = end;
        continue;
      }
      if (i + 1 < s.size() && s[i + 1] == '=') {
        push(TokenKind::kPunct, "<=", start);
        i += 2;
      } else {
        push(TokenKind::kPunct, "<", start);
        ++i;
      }
      continue;
    }
    if (c == '?' || c == '$') {
      std::size_t j = i + 1;
      while (j < s.size() && name_char(s[j])) ++j;
      if (j == i + 1) throw ParseError("SPARQL: empty variable name", start);
      push(TokenKind::kVariable, std::string(s.substr(i + 1, j - i - 1)), start);
      i = j;
      continue;
    }
    if (c == '%') {
      std::size_t j = s.find('%', i + 1);
      if (j == std::string_view::npos) {
        throw ParseError("SPARQL: unterminated %placeholder%", start);
      }
      std::string_view body = s.substr(i + 1, j - i - 1);
      for (char b : body) {
        if (!name_char(b)) throw ParseError("SPARQL: bad placeholder name", start);
      }
      if (body.empty()) throw ParseError("SPARQL: empty placeholder", start);
      push(TokenKind::kPlaceholder, std::string(s.substr(i, j - i + 1)), start);
      i = j + 1;
      continue;
    }
    if (c == '"' || c == '\'') {
      bool long_form = s.substr(i, 3) == std::string(3, c);
      std::size_t j = i + (long_form ? 3 : 1);
      std::size_t body_start = j;
      for (;;) {
        if (j >= s.size()) throw ParseError("SPARQL: unterminated string", start);
        if (s[j] == '\\') {
          j += 2;
          continue;
        }
        if (long_form ? s.substr(j, 3) == std::string(3, c) : s[j] == c) break;
        if (!long_form && (s[j] == '\n' || s[j] == '\r')) {
          throw ParseError("SPARQL: newline in string", j);
        }
        ++j;
      }
      std::string body = rdf::unescape(s.substr(body_start, j - body_start), body_start);
      push(TokenKind::kString, std::move(body), start);
      i = j + (long_form ? 3 : 1);
      continue;
    }
    if (c == '@') {
      std::size_t j = i + 1;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '-')) {
        ++j;
      }
      if (j == i + 1) throw ParseError("SPARQL: empty language tag", start);
      push(TokenKind::kLangTag, std::string(s.substr(i + 1, j - i - 1)), start);
      i = j;
      continue;
    }
    bool sign = (c == '+' || c == '-') && i + 1 < s.size() &&
                (std::isdigit(static_cast<unsigned char>(s[i + 1])) ||
                 (s[i + 1] == '.' && i + 2 < s.size() &&
                  std::isdigit(static_cast<unsigned char>(s[i + 2]))));
    if (std::isdigit(static_cast<unsigned char>(c)) || sign ||
        (c == '.' && i + 1 < s.size() &&
         std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      std::size_t j = i + (sign ? 1 : 0);
      bool dot = false, exp = false;
      while (j < s.size()) {
        char d = s[j];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          ++j;
        } else if (d == '.' && !dot && !exp && j + 1 < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
          dot = true;
          ++j;
        } else if ((d == 'e' || d == 'E') && !exp) {
          std::size_t k = j + 1;
          if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
          if (k >= s.size() || !std::isdigit(static_cast<unsigned char>(s[k]))) break;
          exp = true;
          j = k;
        } else {
          break;
        }
      }
      TokenKind k = exp ? TokenKind::kDouble : dot ? TokenKind::kDecimal
                                                   : TokenKind::kInteger;
      push(k, std::string(s.substr(i, j - i)), start);
      i = j;
      continue;
    }
    if (c == '_' && i + 1 < s.size() && s[i + 1] == ':') {
      std::size_t j = i + 2;
      while (j < s.size() && name_char(s[j])) ++j;
      push(TokenKind::kBlankNode, std::string(s.substr(i, j - i)), start);
      i = j;
      continue;
    }
    if (c == '[') {
      push(TokenKind::kBlankNode, "[", start);
      ++i;
      continue;
    }
    if (name_start(c) || c == ':') {
      std::size_t j = i;
      while (j < s.size() && name_char(s[j])) ++j;
      if (j < s.size() && s[j] == ':') {
        ++j;
        // Local names may contain dots, but not end with one.
        while (j < s.size() && (name_char(s[j]) || s[j] == '.' || s[j] == ':')) {
          if (s[j] == '.' && (j + 1 >= s.size() || !name_char(s[j + 1]))) break;
          ++j;
        }
        push(TokenKind::kPrefixedName, std::string(s.substr(i, j - i)), start);
      } else {
        std::string word(s.substr(i, j - i));
        if (word == "a") {
          push(TokenKind::kKeyword, "a", start);
        } else {
          for (auto& ch : word) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
          push(TokenKind::kKeyword, std::move(word), start);
        }
      }
      i = j;
      continue;
    }
    std::string_view two = s.substr(i, 2);
    if (two == "^^" || two == "!=" || two == ">=" || two == "&&" || two == "||") {
      push(TokenKind::kPunct, std::string(two), start);
      i += 2;
      continue;
    }
    if (std::string_view("{}().,;*=<>!/|^+]").find(c) != std::string_view::npos) {
      push(TokenKind::kPunct, std::string(1, c), start);
      ++i;
      continue;
    }
    throw ParseError(std::string("SPARQL: unexpected character '") + c + "'", start);
  }
  out.push_back({TokenKind::kEnd, "", s.size()});
  return out;
}

}  // namespace rdfpt::sparql
