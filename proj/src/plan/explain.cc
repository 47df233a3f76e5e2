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

#include "rdfpt/plan/explain.h"

#include <sstream>

#include "rdfpt/sparql/serializer.h"
#include "rdfpt/sql/sql_generator.h"

namespace rdfpt::plan {

namespace {

std::string condition_text(const QueryPlan& plan, const Condition& c) {
  std::string s;
  if (c.kind == CondKind::kRegex) {
    s = "regex(" + plan.column_text(c.left) + ", \"" + c.pattern + "\"" +
        (c.flags.empty() ? "" : ", \"" + c.flags + "\"") + ")";
  } else {
    s = sql::condition_sql(plan, c);
  }
  if (c.guard) s += " [when " + plan.column_text(*c.guard) + " IS NOT NULL]";
  return s;
}

void walk(const QueryPlan& plan, const AstNode& n, int depth, std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (n.kind) {
    case NodeKind::kRelation:
      out << pad << "Relation " << plan.views.at(n.view).name << "\n";
      break;
    case NodeKind::kSelect:
      out << pad << "Select " << condition_text(plan, n.conditions.front()) << "\n";
      break;
    case NodeKind::kJoin: {
      out << pad << (n.join == JoinKind::kInner ? "Join" : "LeftOuterJoin");
      std::string sep = n.conditions.empty() ? " (cross)" : " on ";
      for (const auto& c : n.conditions) {
        out << sep << condition_text(plan, c);
        sep = " AND ";
      }
      if (n.conditions.empty()) out << sep;
      out << "\n";
      break;
    }
    case NodeKind::kProject: {
      out << pad << (n.describe ? "Project (describe)" : "Project");
      std::string sep = " ";
      for (const auto& it : n.items) {
        out << sep << it.name << "="
            << (it.column ? plan.column_text(*it.column) : std::string("NULL"))
            << (it.hidden ? " (sort only)" : "");
        sep = ", ";
      }
      out << "\n";
      break;
    }
    case NodeKind::kUnion:
      out << pad << "Union\n";
      break;
    case NodeKind::kDedup:
      out << pad << "DuplicateElimination\n";
      break;
    case NodeKind::kSort: {
      out << pad << "Sort";
      std::string sep = " ";
      for (const auto& k : n.keys) {
        out << sep << k.name << (k.descending ? " DESC" : " ASC");
        sep = ", ";
      }
      out << "\n";
      break;
    }
  }
  for (const auto& c : n.children) walk(plan, *c, depth + 1, out);
}

}  // namespace

std::string ast_text(const QueryPlan& plan, const AstNode& node) {
  std::ostringstream out;
  walk(plan, node, 0, out);
  return out.str();
}

std::string explain(const QueryPlan& plan) {
  std::ostringstream out;
  for (std::size_t b = 0; b < plan.branches.size(); ++b) {
    const BranchPlan& bp = plan.branches[b];
    if (plan.branches.size() > 1) out << "Branch " << b + 1 << "\n";
    out << "Subjects:\n";
    for (const auto& e : bp.subjects.entries) {
      out << "  " << sparql::term_text(e.subject) << " (" << e.patterns.size()
          << " patterns)\n";
      for (const auto& p : e.patterns) {
        out << "    " << sparql::term_text(p.pattern.subject) << " "
            << sparql::term_text(p.pattern.predicate) << " "
            << sparql::term_text(p.pattern.object) << "\n";
      }
    }
    out << "Views:\n";
    for (int v : bp.views) {
      const ViewDef& view = plan.views[v];
      out << "  " << view.name << " <- " << sparql::term_text(view.subject)
          << (view.fragment ? " (optional fragment)" : "") << ": key";
      for (const auto& c : view.columns) {
        out << ", " << c.name << ":" << rdf::type_tag(c.type);
        if (c.fold >= 0) out << " (optional)";
      }
      out << "\n";
    }
    out << "Joins: " << bp.joins.size() << "\n";
    for (const auto& j : bp.joins) {
      out << "  " << plan.views[j.left_view].name << " -> " << plan.views[j.right_view].name
          << ".key " << (j.kind == JoinKind::kInner ? "inner" : "left outer") << " via";
      for (const auto& c : j.left_columns) out << " " << c;
      out << "\n";
    }
  }
  out << "Plan:\n" << ast_text(plan, *plan.root);
  if (plan.query.limit) out << "Limit " << *plan.query.limit << "\n";
  return out.str();
}

}  // namespace rdfpt::plan
