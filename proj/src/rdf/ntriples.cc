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

#include "rdfpt/rdf/ntriples.h"

#include <cctype>
#include <string>

#include "rdfpt/error.h"

namespace rdfpt::rdf {
namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class LineParser {
 public:
  explicit LineParser(std::string_view line) : s_(line) {}

  Triple parse() {
    Triple t;
    skip_ws();
    t.subject = subject();
    require_ws();
    t.predicate = uri_ref();
    require_ws();
    t.object = object();
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '.') fail("expected '.'");
    ++pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] != '#') fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("N-Triples: " + what, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' ||
                                s_[pos_] == '\r')) {
      ++pos_;
    }
  }

  // "<a><b>" is legal N-Triples: IRIs self-delimit, so whitespace between
  // terms is optional.
  void require_ws() { skip_ws(); }

  Term subject() {
    if (starts_with("_:")) throw UnsupportedFeature("blank node");
    return uri_ref();
  }

  Term object() {
    if (pos_ >= s_.size()) fail("missing object");
    if (starts_with("_:")) throw UnsupportedFeature("blank node");
    if (s_[pos_] == '<') return uri_ref();
    if (s_[pos_] == '"') return literal();
    fail("expected object");
  }

  bool starts_with(std::string_view p) const {
    return s_.substr(pos_, p.size()) == p;
  }

  Term uri_ref() {
    if (pos_ >= s_.size() || s_[pos_] != '<') fail("expected '<'");
    std::size_t start = ++pos_;
    while (pos_ < s_.size() && s_[pos_] != '>') {
      char c = s_[pos_];
      if (c == ' ' || c == '"' || c == '<' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`') {
        fail("illegal character in IRI");
      }
      ++pos_;
    }
    if (pos_ >= s_.size()) fail("unterminated IRI");
    std::string raw(s_.substr(start, pos_ - start));
    ++pos_;
    if (raw.empty()) fail("empty IRI");
    return Term::uri(unescape(raw, start));
  }

  Term literal() {
    std::size_t start = ++pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') ++pos_;
      ++pos_;
    }
    if (pos_ >= s_.size()) fail("unterminated string literal");
    std::string lexical = unescape(s_.substr(start, pos_ - start), start);
    ++pos_;
    if (starts_with("@")) {
      std::size_t tag_start = ++pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == tag_start) fail("empty language tag");
      return Term::literal(std::move(lexical), {},
                           std::string(s_.substr(tag_start, pos_ - tag_start)));
    }
    if (starts_with("^^")) {
      pos_ += 2;
      Term dt = uri_ref();
      return Term::literal(std::move(lexical), dt.value);
    }
    return Term::literal(std::move(lexical));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string unescape(std::string_view text, std::size_t base_offset) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    if (i + 1 >= text.size()) {
      throw ParseError("dangling escape", base_offset + i);
    }
    char e = text[++i];
    switch (e) {
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u':
      case 'U': {
        std::size_t n = e == 'u' ? 4 : 8;
        std::uint32_t cp = 0;
        for (std::size_t k = 1; k <= n; ++k) {
          if (i + k >= text.size()) {
            throw ParseError("truncated unicode escape", base_offset + i);
          }
          char h = text[i + k];
          cp <<= 4;
          if (h >= '0' && h <= '9') cp |= h - '0';
          else if (h >= 'a' && h <= 'f') cp |= h - 'a' + 10;
          else if (h >= 'A' && h <= 'F') cp |= h - 'A' + 10;
          else throw ParseError("bad hex digit in escape", base_offset + i + k);
        }
        append_utf8(out, cp);
        i += n;
        break;
      }
      default:
        throw ParseError(std::string("unknown escape \\") + e,
                         base_offset + i);
    }
  }
  return out;
}

bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

Triple parse_ntriples(std::string_view line) {
  return LineParser(line).parse();
}

std::vector<Triple> parse_ntriples_document(std::istream& in) {
  std::vector<Triple> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    try {
      out.push_back(parse_ntriples(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.message(),
                       e.offset());
    }
  }
  return out;
}

}  // namespace rdfpt::rdf
