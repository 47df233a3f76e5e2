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

#include "rdfpt/sql/sql_parser.h"

#include <cctype>
#include <functional>

#include "rdfpt/error.h"

namespace rdfpt::sql {

using plan::AstNode;
using plan::AstPtr;
using plan::ColumnRef;
using plan::Condition;
using plan::CondKind;
using plan::JoinKind;

namespace {

struct Rel {
  int view = -1;
  JoinKind kind = JoinKind::kInner;
  std::vector<Condition> on;      // join conditions
  std::vector<Condition> sigmas;  // innermost first
};

class Parser {
 public:
  explicit Parser(const SqlQueryText& sql) : text_(sql.text), side_(sql.side) {
    names_.views = side_.views;
    names_.query.prefixes = side_.query_prefixes;
    names_.catalog.prefixes = side_.catalog_prefixes;
  }

  plan::LogicalPlan run() {
    plan::LogicalPlan out;
    out.views = side_.views;
    out.scopes = side_.scopes;
    out.folds = side_.folds;
    out.output_names = side_.output_names;
    out.describe_columns = side_.describe_columns;

    expect("SELECT");
    bool distinct = accept("DISTINCT");
    AstPtr root;
    ws();
    if (text_.compare(pos_, 2, "U.") == 0) {
      root = union_query();
    } else {
      root = plain_query();
    }
    if (distinct) root = AstNode::dedup(root);
    if (!keys_.empty()) root = AstNode::sort(keys_, root);
    if (accept("LIMIT")) out.limit = std::stoull(word());
    ws();
    if (pos_ != text_.size()) fail("trailing text");
    out.root = root;
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("SQL: " + what + " at offset " + std::to_string(pos_), pos_);
  }

  void ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view kw) {
    ws();
    if (text_.compare(pos_, kw.size(), kw) != 0) return false;
    std::size_t end = pos_ + kw.size();
    if (std::isalpha(static_cast<unsigned char>(kw.back())) && end < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }

  void expect(std::string_view kw) {
    if (!accept(kw)) fail("expected " + std::string(kw));
  }

  std::string word() {
    ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a word");
    return text_.substr(start, pos_ - start);
  }

  bool at_view_ref() {
    ws();
    std::size_t p = pos_;
    if (p >= text_.size() || text_[p] != 'R') return false;
    ++p;
    std::size_t digits = p;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    return p > digits && (p == text_.size() || text_[p] != ':');
  }

  int view_name() {
    ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || text_[pos_] != 'R') fail("expected a view name");
    ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < side_.views.size(); ++i) {
      if (side_.views[i].name == name) return static_cast<int>(i);
    }
    fail("unknown view " + name);
  }

  static bool delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ')' || c == '=' ||
           c == '<' || c == '>' || c == '!';
  }

  // "Rk.<column text>"; the longest declared column that fits wins.
  ColumnRef column_ref(bool allow_star = false, bool* star = nullptr) {
    int v = view_name();
    if (pos_ >= text_.size() || text_[pos_] != '.') fail("expected '.'");
    ++pos_;
    if (allow_star && pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      *star = true;
      return ColumnRef{v, std::string(plan::kKeyColumn)};
    }
    const std::string prefix = side_.views[v].name + ".";
    std::vector<ColumnRef> candidates{ColumnRef{v, std::string(plan::kKeyColumn)}};
    for (const auto& c : side_.views[v].columns) candidates.push_back(ColumnRef{v, c.name});
    std::optional<ColumnRef> best;
    std::size_t best_len = 0;
    for (const auto& cand : candidates) {
      std::string shown = names_.column_text(cand).substr(prefix.size());
      if (text_.compare(pos_, shown.size(), shown) != 0) continue;
      std::size_t end = pos_ + shown.size();
      if (end < text_.size() && !delimiter(text_[end])) continue;
      if (shown.size() > best_len) {
        best = cand;
        best_len = shown.size();
      }
    }
    if (!best) fail("unknown column of " + side_.views[v].name);
    pos_ += best_len;
    return *best;
  }

  std::string quoted(char q) {
    ws();
    if (pos_ >= text_.size() || text_[pos_] != q) fail(std::string("expected ") + q);
    ++pos_;
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated literal");
      char c = text_[pos_++];
      if (c == q) {
        if (q == '\'' && pos_ < text_.size() && text_[pos_] == '\'') {
          out += '\'';
          ++pos_;
          continue;
        }
        return out;
      }
      out += c;
    }
  }

  rdf::Value constant() {
    using rdf::Value;
    using rdf::ValueKind;
    ws();
    if (pos_ >= text_.size()) fail("expected a constant");
    char c = text_[pos_];
    if (c == '"') {
      std::string s = quoted('"');
      if (s.size() >= 2 && s.front() == '<' && s.back() == '>') {
        return Value::uri(s.substr(1, s.size() - 2));
      }
      return Value::uri(s);
    }
    if (c == '\'') return Value::string(quoted('\''));
    if (accept("DATE")) return {ValueKind::kDate, quoted('\'')};
    if (accept("DOUBLE")) return {ValueKind::kDouble, quoted('\'')};
    if (accept("DECIMAL")) return {ValueKind::kDecimal, quoted('\'')};
    if (accept("BOOLEAN")) return {ValueKind::kBoolean, quoted('\'')};
    std::size_t start = pos_;
    while (pos_ < text_.size() && !delimiter(text_[pos_])) ++pos_;
    std::string tok = text_.substr(start, pos_ - start);
    if (tok.empty()) fail("expected a constant");
    if (tok == "true" || tok == "false") return {ValueKind::kBoolean, tok};
    if (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-' || tok[0] == '+') {
      return {tok.find('.') == std::string::npos ? ValueKind::kInteger : ValueKind::kDecimal,
              tok};
    }
    auto colon = tok.find(':');
    if (colon == std::string::npos) fail("bad constant " + tok);
    std::string label = tok.substr(0, colon);
    auto ns = side_.query_prefixes.namespace_of(label);
    if (!ns) ns = side_.catalog_prefixes.namespace_of(label);
    if (!ns) fail("unknown prefix " + label);
    return Value::uri(*ns + tok.substr(colon + 1));
  }

  Condition condition() {
    Condition c;
    c.left = column_ref();
    if (accept("IS")) {
      c.kind = accept("NOT") ? CondKind::kBound : CondKind::kNotBound;
      expect("NULL");
      return c;
    }
    if (accept("LIKE")) {
      c.kind = CondKind::kRegex;
      quoted('\'');
      return c;
    }
    static const std::pair<std::string_view, rdf::CompareOp> kOps[] = {
        {"!=", rdf::CompareOp::kNe}, {"<=", rdf::CompareOp::kLe}, {">=", rdf::CompareOp::kGe},
        {"<", rdf::CompareOp::kLt},  {">", rdf::CompareOp::kGt},  {"=", rdf::CompareOp::kEq}};
    for (const auto& [sym, op] : kOps) {
      if (!accept(sym)) continue;
      if (op == rdf::CompareOp::kEq && at_view_ref()) {
        c.kind = CondKind::kColumnEq;
        c.right_column = column_ref();
        return c;
      }
      c.kind = CondKind::kCompare;
      c.op = op;
      c.constant = constant();
      return c;
    }
    fail("expected an operator");
  }

  std::vector<Condition> conjunction() {
    std::vector<Condition> out{condition()};
    while (accept("AND")) out.push_back(condition());
    return out;
  }

  // Rebuilds the subtree of the scope that starts at rels[k].
  AstPtr build(const std::vector<Rel>& rels, std::size_t& k) {
    auto leaf = [](const Rel& r) {
      AstPtr n = AstNode::relation(r.view);
      for (const auto& s : r.sigmas) n = AstNode::select(s, n);
      return n;
    };
    const int scope = side_.views[rels[k].view].scope;
    AstPtr tree = leaf(rels[k]);
    ++k;
    while (k < rels.size()) {
      const Rel& r = rels[k];
      int sc = side_.views[r.view].scope;
      if (sc == scope && r.kind == JoinKind::kInner) {
        tree = AstNode::join_of(JoinKind::kInner, tree, leaf(r), r.on);
        ++k;
      } else if (r.kind == JoinKind::kLeftOuter && side_.scopes[sc].parent == scope) {
        std::vector<Condition> on = r.on;
        AstPtr sub = build(rels, k);
        tree = AstNode::join_of(JoinKind::kLeftOuter, tree, sub, std::move(on));
      } else {
        break;
      }
    }
    return tree;
  }

  AstPtr branch() {
    std::vector<Rel> rels(1);
    rels[0].view = view_name();
    while (true) {
      JoinKind kind;
      if (accept("JOIN")) {
        kind = JoinKind::kInner;
      } else if (accept("LEFT")) {
        expect("OUTER");
        expect("JOIN");
        kind = JoinKind::kLeftOuter;
      } else {
        break;
      }
      Rel r;
      r.kind = kind;
      r.view = view_name();
      if (!accept("ON")) {
        rels.push_back(std::move(r));
        continue;
      }
      expect("(");
      for (auto& c : conjunction()) {
        auto vs = c.views();
        if (vs.size() > 1) {
          r.on.push_back(std::move(c));
        } else if (*vs.begin() == r.view) {
          r.sigmas.push_back(std::move(c));
        } else if (*vs.begin() == rels[0].view && rels.size() == 1) {
          rels[0].sigmas.push_back(std::move(c));
        } else {
          fail("selection on a view not introduced here");
        }
      }
      expect(")");
      rels.push_back(std::move(r));
    }
    std::size_t k = 0;
    AstPtr tree = build(rels, k);
    if (k != rels.size()) fail("join order does not match the view scopes");
    if (accept("WHERE")) {
      for (auto& c : conjunction()) {
        if (note_ >= side_.where.size()) fail("WHERE conjunct without a side-table note");
        const WhereNote& note = side_.where[note_++];
        c.guard = note.guard;
        if (c.kind == CondKind::kRegex) {
          c.pattern = note.pattern;
          c.flags = note.flags;
        }
        tree = AstNode::select(std::move(c), tree);
      }
    }
    return tree;
  }

  std::vector<plan::SortKey> order_by(const std::function<std::string()>& key_name) {
    std::vector<plan::SortKey> keys;
    if (!accept("ORDER")) return keys;
    expect("BY");
    do {
      plan::SortKey k;
      k.name = key_name();
      if (accept("DESC")) {
        k.descending = true;
      } else {
        accept("ASC");
      }
      keys.push_back(std::move(k));
    } while (accept(","));
    return keys;
  }

  AstPtr plain_query() {
    std::vector<plan::ProjectItem> items;
    bool describe = false;
    std::size_t name_index = 0;
    auto next_name = [&]() {
      if (name_index >= side_.item_names.size()) fail("more SELECT items than names");
      return side_.item_names[name_index++];
    };
    do {
      bool star = false;
      ColumnRef ref = column_ref(true, &star);
      if (star) {
        describe = true;
        break;
      }
      items.push_back({next_name(), ref, false});
    } while (accept(","));
    expect("FROM");
    AstPtr body = branch();
    keys_ = order_by([&]() {
      ColumnRef ref = column_ref();
      for (const auto& it : items) {
        if (it.column == ref) return it.name;
      }
      items.push_back({next_name(), ref, true});
      return items.back().name;
    });
    AstPtr p = AstNode::project(std::move(items), body);
    p->describe = describe;
    return p;
  }

  AstPtr union_query() {
    std::vector<plan::ProjectItem> items;
    do {
      expect("U.");
      items.push_back({word(), std::nullopt, false});
    } while (accept(","));
    expect("FROM");
    expect("(");
    std::vector<AstPtr> parts;
    do {
      expect("SELECT");
      std::vector<plan::ProjectItem> part;
      do {
        std::optional<ColumnRef> col;
        if (!accept("NULL")) col = column_ref();
        expect("AS");
        part.push_back({word(), col, false});
      } while (accept(","));
      expect("FROM");
      parts.push_back(AstNode::project(std::move(part), branch()));
    } while (accept("UNION") && (expect("ALL"), true));
    expect(")");
    expect("U");
    keys_ = order_by([&]() {
      expect("U.");
      std::string name = word();
      bool known = false;
      for (const auto& it : items) known = known || it.name == name;
      if (!known) items.push_back({name, std::nullopt, true});
      return name;
    });
    return AstNode::project(std::move(items), AstNode::unite(std::move(parts)));
  }

  const std::string& text_;
  const SideTable& side_;
  plan::QueryPlan names_;
  std::size_t pos_ = 0;
  std::size_t note_ = 0;
  std::vector<plan::SortKey> keys_;
};

}  // namespace

plan::LogicalPlan parse_sql(const SqlQueryText& sql) { return Parser(sql).run(); }

}  // namespace rdfpt::sql
