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

#include "rdfpt/sql/sql_generator.h"

#include <cctype>

#include "rdfpt/error.h"
#include "rdfpt/sql/regex_translate.h"

namespace rdfpt::sql {

using plan::AstNode;
using plan::AstPtr;
using plan::Condition;
using plan::CondKind;
using plan::JoinKind;
using plan::NodeKind;
using plan::QueryPlan;

namespace {

bool bare_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != ':' && c != '-' &&
        c != '.') {
      return false;
    }
  }
  return s.back() != '.';
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

// Relation with the selects stacked on it, innermost first.
bool peel_leaf(const AstPtr& node, int& view, std::vector<Condition>& sigmas) {
  std::vector<Condition> outer_first;
  AstPtr n = node;
  while (n->kind == NodeKind::kSelect) {
    outer_first.push_back(n->conditions.front());
    n = n->children.front();
  }
  if (n->kind != NodeKind::kRelation) return false;
  view = n->view;
  sigmas.assign(outer_first.rbegin(), outer_first.rend());
  return true;
}

struct JoinRec {
  JoinKind kind;
  int view;
  std::vector<Condition> on;
};

struct Emitted {
  int first = -1;
  std::vector<Condition> first_sigmas;
  std::vector<JoinRec> joins;
};

Emitted emit_tree(const AstPtr& node) {
  Emitted out;
  if (peel_leaf(node, out.first, out.first_sigmas)) return out;
  if (node->kind != NodeKind::kJoin) throw PlanningError("unexpected operator inside FROM");
  out = emit_tree(node->children[0]);
  Emitted right = emit_tree(node->children[1]);
  JoinRec rec{node->join, right.first, node->conditions};
  rec.on.insert(rec.on.end(), right.first_sigmas.begin(), right.first_sigmas.end());
  out.joins.push_back(std::move(rec));
  for (auto& j : right.joins) out.joins.push_back(std::move(j));
  return out;
}

class Generator {
 public:
  explicit Generator(const QueryPlan& plan) : plan_(plan) {}

  SqlQueryText run() {
    SqlQueryText out;
    const AstPtr& root = plan_.root;
    AstPtr n = root;
    std::vector<plan::SortKey> keys;
    bool distinct = false;
    if (n->kind == NodeKind::kSort) {
      keys = n->keys;
      n = n->children.front();
    }
    if (n->kind == NodeKind::kDedup) {
      distinct = true;
      n = n->children.front();
    }
    if (n->kind != NodeKind::kProject) throw PlanningError("root must project");
    const AstNode& proj = *n;
    const AstPtr& body = proj.children.front();
    std::string text = distinct ? "SELECT DISTINCT " : "SELECT ";

    if (body->kind == NodeKind::kUnion) {
      std::string sep;
      for (const auto& item : proj.items) {
        if (item.hidden) continue;
        text += sep + "U." + item.name;
        sep = ", ";
      }
      text += " FROM (";
      std::string usep;
      for (const auto& part : body->children) {
        text += usep + "SELECT ";
        std::string isep;
        for (const auto& item : part->items) {
          text += isep + (item.column ? plan_.column_text(*item.column) : "NULL") + " AS " +
                  item.name;
          isep = ", ";
        }
        text += " FROM " + branch(part->children.front());
        usep = " UNION ALL ";
      }
      text += ") U";
      if (!keys.empty()) {
        text += " ORDER BY ";
        std::string ksep;
        for (const auto& k : keys) {
          text += ksep + "U." + k.name + (k.descending ? " DESC" : "");
          ksep = ", ";
        }
      }
    } else {
      std::string sep;
      for (const auto& item : proj.items) {
        if (item.hidden) continue;
        text += sep + plan_.column_text(*item.column);
        sep = ", ";
      }
      if (proj.describe) {
        text += sep + plan_.views.at(proj.items.front().column->view).name + ".*";
      }
      text += " FROM " + branch(body);
      if (!keys.empty()) {
        text += " ORDER BY ";
        std::string ksep;
        for (const auto& k : keys) {
          const plan::ProjectItem* item = nullptr;
          for (const auto& it : proj.items) {
            if (it.name == k.name) item = &it;
          }
          if (item == nullptr || !item->column) throw PlanningError("unbound sort key " + k.name);
          text += ksep + plan_.column_text(*item->column) + (k.descending ? " DESC" : "");
          ksep = ", ";
        }
      }
    }
    if (plan_.query.limit) text += " LIMIT " + std::to_string(*plan_.query.limit);

    out.text = std::move(text);
    SideTable& side = out.side;
    side.views = plan_.views;
    side.scopes = plan_.scopes;
    side.folds = plan_.folds;
    side.output_names = plan_.output_names;
    side.describe_columns = plan_.describe_columns;
    for (const auto& item : proj.items) {
      if (!item.hidden) side.item_names.push_back(item.name);
    }
    for (const auto& item : proj.items) {
      if (item.hidden) side.item_names.push_back(item.name);
    }
    side.query_prefixes = plan_.query.prefixes;
    side.catalog_prefixes = plan_.catalog.prefixes;
    side.where = std::move(notes_);
    return out;
  }

 private:
  // FROM ... [WHERE ...] of one branch tree.
  std::string branch(const AstPtr& tree) {
    std::vector<Condition> where;
    int view = -1;
    std::vector<Condition> sigmas;
    std::string text;
    if (peel_leaf(tree, view, sigmas)) {
      text = plan_.views.at(view).name;
      where = std::move(sigmas);
    } else {
      AstPtr n = tree;
      std::vector<Condition> outer_first;
      while (n->kind == NodeKind::kSelect) {
        outer_first.push_back(n->conditions.front());
        n = n->children.front();
      }
      where.assign(outer_first.rbegin(), outer_first.rend());
      Emitted e = emit_tree(n);
      text = plan_.views.at(e.first).name;
      for (std::size_t i = 0; i < e.joins.size(); ++i) {
        JoinRec& j = e.joins[i];
        std::vector<Condition> on;
        std::size_t own = 0;
        for (const auto& c : j.on) {
          if (c.views().size() > 1) ++own;
        }
        on.assign(j.on.begin(), j.on.begin() + static_cast<std::ptrdiff_t>(own));
        if (i == 0) on.insert(on.end(), e.first_sigmas.begin(), e.first_sigmas.end());
        on.insert(on.end(), j.on.begin() + static_cast<std::ptrdiff_t>(own), j.on.end());
        text += j.kind == JoinKind::kInner ? " JOIN " : " LEFT OUTER JOIN ";
        text += plan_.views.at(j.view).name;
        if (on.empty()) continue;
        text += " ON (";
        std::string sep;
        for (const auto& c : on) {
          text += sep + condition_sql(plan_, c);
          sep = " AND ";
        }
        text += ")";
      }
    }
    if (!where.empty()) {
      text += " WHERE ";
      std::string sep;
      for (const auto& c : where) {
        text += sep + condition_sql(plan_, c);
        sep = " AND ";
        WhereNote note;
        note.guard = c.guard;
        if (c.kind == CondKind::kRegex) {
          note.regex = true;
          note.residual = translate_regex(c.pattern, c.flags).residual;
          note.pattern = c.pattern;
          note.flags = c.flags;
        }
        notes_.push_back(std::move(note));
      }
    }
    return text;
  }

  const QueryPlan& plan_;
  std::vector<WhereNote> notes_;
};

}  // namespace

std::string constant_sql(const QueryPlan& plan, const rdf::Value& v) {
  using rdf::ValueKind;
  switch (v.kind) {
    case ValueKind::kUri: {
      const std::string& u = v.lexical;
      if (u.size() >= 2 && u.front() == '%' && u.back() == '%') return "\"" + u + "\"";
      std::string shown = plan.display_uri(u);
      if (shown.front() != '<' && bare_token(shown)) {
        auto colon = shown.find(':');
        std::string label = shown.substr(0, colon);
        auto ns = plan.query.prefixes.namespace_of(label);
        if (!ns) ns = plan.catalog.prefixes.namespace_of(label);
        if (ns && *ns + shown.substr(colon + 1) == u) return shown;
      }
      return "\"<" + u + ">\"";
    }
    case ValueKind::kString: return quote(v.lexical);
    case ValueKind::kDate: return "DATE " + quote(v.lexical);
    case ValueKind::kDouble: return "DOUBLE " + quote(v.lexical);
    case ValueKind::kInteger: return v.lexical;
    case ValueKind::kDecimal:
      return v.lexical.find('.') == std::string::npos ? "DECIMAL " + quote(v.lexical) : v.lexical;
    case ValueKind::kBoolean:
      return v.lexical == "true" || v.lexical == "false" ? v.lexical : "BOOLEAN " + quote(v.lexical);
  }
  return v.lexical;
}

std::string condition_sql(const QueryPlan& plan, const Condition& c) {
  std::string left = plan.column_text(c.left);
  switch (c.kind) {
    case CondKind::kCompare:
      return left + " " + std::string(rdf::op_symbol(c.op)) + " " +
             constant_sql(plan, *c.constant);
    case CondKind::kColumnEq: return left + " = " + plan.column_text(*c.right_column);
    case CondKind::kRegex: return left + " LIKE " + quote(translate_regex(c.pattern, c.flags).like);
    case CondKind::kBound: return left + " IS NOT NULL";
    case CondKind::kNotBound: return left + " IS NULL";
  }
  return left;
}

SqlQueryText generate_sql(const QueryPlan& plan) { return Generator(plan).run(); }

std::string normalize_whitespace(const std::string& text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
    } else {
      if (space) out += ' ';
      space = false;
      out += c;
    }
  }
  return out;
}

}  // namespace rdfpt::sql
