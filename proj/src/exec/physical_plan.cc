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

#include "rdfpt/exec/physical_plan.h"

#include <sstream>

#include "rdfpt/error.h"
#include "rdfpt/sql/sql_parser.h"

namespace rdfpt::exec {

using plan::AstNode;
using plan::AstPtr;
using plan::ColumnRef;
using plan::Condition;
using plan::NodeKind;

std::string_view stage_kind_name(StageKind kind) {
  switch (kind) {
    case StageKind::kScan: return "scan";
    case StageKind::kJoin: return "join";
    case StageKind::kFinalize: return "finalize";
    case StageKind::kUnion: return "union";
    case StageKind::kDedup: return "dedup";
    case StageKind::kSort: return "sort";
    case StageKind::kFetch: return "fetch";
  }
  return "stage";
}

namespace {

class Compiler {
 public:
  explicit Compiler(const plan::LogicalPlan& logical) { out_.logical = logical; }

  PhysicalPlan run() {
    AstPtr n = out_.logical.root;
    std::vector<plan::SortKey> keys;
    if (n->kind == NodeKind::kSort) {
      keys = n->keys;
      n = n->children.front();
    }
    if (n->kind == NodeKind::kDedup) {
      out_.dedup = true;
      n = n->children.front();
    }
    if (n->kind != NodeKind::kProject) throw PlanningError("root must project");
    const AstNode& proj = *n;
    out_.describe = proj.describe;
    for (const auto& it : proj.items) {
      out_.item_names.push_back(it.name);
      out_.item_hidden.push_back(it.hidden);
    }
    for (const auto& k : keys) {
      std::size_t i = 0;
      while (i < proj.items.size() && proj.items[i].name != k.name) ++i;
      if (i == proj.items.size()) throw PlanningError("sort key " + k.name + " not projected");
      out_.sort_keys.push_back({i, k.descending});
    }

    const AstPtr& body = proj.children.front();
    std::vector<int> finals;
    if (body->kind == NodeKind::kUnion) {
      for (const auto& part : body->children) {
        std::vector<std::optional<ColumnRef>> items;
        for (const auto& name : out_.item_names) {
          std::optional<ColumnRef> col;
          for (const auto& it : part->items) {
            if (it.name == name) col = it.column;
          }
          items.push_back(col);
        }
        finals.push_back(branch(part->children.front(), std::move(items)));
      }
      Stage u = make(StageKind::kUnion);
      u.inputs = finals;
      finals = {push(std::move(u))};
    } else {
      std::vector<std::optional<ColumnRef>> items;
      for (const auto& it : proj.items) items.push_back(it.column);
      finals.push_back(branch(body, std::move(items)));
    }
    int last = finals.front();
    if (out_.dedup) {
      Stage d = make(StageKind::kDedup);
      d.inputs = {last};
      last = push(std::move(d));
    }
    if (!keys.empty() || out_.logical.limit) {
      Stage s = make(StageKind::kSort);
      s.inputs = {last};
      s.limit = out_.logical.limit;
      last = push(std::move(s));
    }
    if (out_.describe) {
      Stage f = make(StageKind::kFetch);
      f.inputs = {last};
      push(std::move(f));
    }
    mark_expansions();
    return std::move(out_);
  }

 private:
  Stage make(StageKind kind) {
    Stage s;
    s.kind = kind;
    return s;
  }

  int push(Stage s) {
    s.id = static_cast<int>(out_.stages.size()) + 1;
    out_.stages.push_back(std::move(s));
    return out_.stages.back().id;
  }

  Stage& stage(int id) { return out_.stages[static_cast<std::size_t>(id - 1)]; }

  static bool leaf_chain(const AstPtr& n) {
    AstPtr p = n;
    while (p->kind == NodeKind::kSelect) p = p->children.front();
    return p->kind == NodeKind::kRelation;
  }

  int node(const AstPtr& n, std::vector<int>& views) {
    if (leaf_chain(n)) {
      Stage s = make(StageKind::kScan);
      std::vector<Condition> outer_first;
      AstPtr p = n;
      while (p->kind == NodeKind::kSelect) {
        outer_first.push_back(p->conditions.front());
        p = p->children.front();
      }
      s.view = p->view;
      s.sigmas.assign(outer_first.rbegin(), outer_first.rend());
      for (const auto& c : s.sigmas) {
        if (c.kind == plan::CondKind::kCompare && c.op == rdf::CompareOp::kEq &&
            c.left.is_key() && c.constant && c.constant->kind == rdf::ValueKind::kUri) {
          s.row_key = c.constant->lexical;
        }
      }
      views.push_back(s.view);
      return push(std::move(s));
    }
    if (n->kind != NodeKind::kJoin) throw PlanningError("unexpected operator below the joins");
    int l = node(n->children[0], views);
    int r = node(n->children[1], views);
    Stage j = make(StageKind::kJoin);
    j.inputs = {l, r};
    j.join = n->join;
    j.on = n->conditions;
    return push(std::move(j));
  }

  int branch(const AstPtr& tree, std::vector<std::optional<ColumnRef>> items) {
    std::vector<Condition> outer_first;
    AstPtr n = tree;
    std::vector<int> views;
    if (leaf_chain(tree)) {
      // No joins: the residual WHERE runs in the scan's map.
      int id = node(tree, views);
      Stage& s = stage(id);
      s.finalize = true;
      s.branch_views = views;
      s.items = std::move(items);
      return id;
    }
    while (n->kind == NodeKind::kSelect) {
      outer_first.push_back(n->conditions.front());
      n = n->children.front();
    }
    int top = node(n, views);
    Stage f = make(StageKind::kFinalize);
    f.inputs = {top};
    f.finalize = true;
    f.residual.assign(outer_first.rbegin(), outer_first.rend());
    f.branch_views = views;
    f.items = std::move(items);
    return push(std::move(f));
  }

  // Columns that conditions or sort keys read must be single values.
  void mark_expansions() {
    std::map<int, std::set<std::string>> used;
    auto use = [&](const ColumnRef& c) {
      if (!c.is_key()) used[c.view].insert(c.column);
    };
    auto use_cond = [&](const Condition& c) {
      use(c.left);
      if (c.right_column) use(*c.right_column);
      if (c.guard) use(*c.guard);
    };
    for (const auto& s : out_.stages) {
      for (const auto& c : s.sigmas) use_cond(c);
      for (const auto& c : s.on) use_cond(c);
      for (const auto& c : s.residual) use_cond(c);
      if (s.finalize) {
        for (const auto& [i, desc] : out_.sort_keys) {
          if (s.items[i]) use(*s.items[i]);
        }
      }
    }
    // A fold group's guard column is used too.
    for (const auto& g : out_.logical.folds) used[g.view].insert(g.columns.front());
    for (auto& s : out_.stages) {
      if (s.kind == StageKind::kScan) s.expand = used[s.view];
    }
  }

  PhysicalPlan out_;
};

std::string cond_text(const PhysicalPlan& p, const Condition& c) {
  plan::QueryPlan names;
  names.views = p.logical.views;
  auto col = [&](const ColumnRef& r) { return names.views.at(r.view).name + "." + r.column; };
  std::string s = col(c.left);
  switch (c.kind) {
    case plan::CondKind::kCompare:
      s += " " + std::string(rdf::op_symbol(c.op)) + " " + rdf::render(*c.constant);
      break;
    case plan::CondKind::kColumnEq: s += " = " + col(*c.right_column); break;
    case plan::CondKind::kRegex: s = "regex(" + s + ", '" + c.pattern + "')"; break;
    case plan::CondKind::kBound: s += " is not null"; break;
    case plan::CondKind::kNotBound: s += " is null"; break;
  }
  if (c.guard) s += " (when " + col(*c.guard) + " is not null)";
  return s;
}

}  // namespace

PhysicalPlan compile_physical(const plan::LogicalPlan& logical) {
  return Compiler(logical).run();
}

PhysicalPlan compile_physical(const sql::SqlQueryText& sql) {
  return compile_physical(sql::parse_sql(sql));
}

std::string explain_physical(const PhysicalPlan& p) {
  std::ostringstream out;
  auto name = [](int id) { return "Stage-" + std::to_string(id); };
  out << "STAGE DEPENDENCIES:\n";
  for (const auto& s : p.stages) {
    out << "  " << name(s.id);
    if (s.inputs.empty()) {
      out << " is a root stage\n";
    } else {
      out << " depends on stages: ";
      for (std::size_t i = 0; i < s.inputs.size(); ++i) out << (i ? ", " : "") << name(s.inputs[i]);
      out << "\n";
    }
  }
  out << "\nSTAGE PLANS:\n";
  const auto& views = p.logical.views;
  for (const auto& s : p.stages) {
    out << "  Stage: " << name(s.id) << "\n";
    switch (s.kind) {
      case StageKind::kScan: {
        out << "    Map Reduce\n      Map Operator Tree:\n";
        out << "          TableScan\n            alias: " << views.at(s.view).name << "\n";
        out << "            columns: key";
        for (const auto& c : views.at(s.view).columns) out << ", " << c.name;
        out << "\n";
        if (s.row_key) out << "            bloom filter row key: <" << *s.row_key << ">\n";
        for (const auto& c : s.sigmas) {
          out << "            Filter Operator\n              predicate: " << cond_text(p, c) << "\n";
        }
        break;
      }
      case StageKind::kJoin: {
        out << "    Map Reduce\n      Map Operator Tree:\n";
        out << "          Reduce Output Operator\n            key expressions:";
        for (const auto& c : s.on) out << " " << cond_text(p, c);
        if (s.on.empty()) out << " (none)";
        out << "\n      Reduce Operator Tree:\n";
        out << "          Join Operator\n            condition map:\n              "
            << (s.join == plan::JoinKind::kInner ? "Inner Join" : "Left Outer Join")
            << " 0 to 1\n";
        break;
      }
      case StageKind::kFinalize:
        out << "    Map Reduce\n      Map Operator Tree:\n";
        break;
      case StageKind::kUnion:
        out << "    Map Reduce\n      Map Operator Tree:\n          Union\n";
        break;
      case StageKind::kDedup:
        out << "    Map Reduce\n      Map Operator Tree:\n          Reduce Output Operator\n"
            << "            key expressions: all output columns\n"
            << "      Reduce Operator Tree:\n          Group By Operator\n";
        break;
      case StageKind::kSort:
        out << "    Map Reduce\n      Map Operator Tree:\n          Reduce Output Operator\n"
            << "            sort order: ";
        for (const auto& [i, desc] : p.sort_keys) out << (desc ? "-" : "+");
        out << "\n      Reduce Operator Tree:\n          Extract\n";
        if (s.limit) out << "            Limit\n              limit: " << *s.limit << "\n";
        break;
      case StageKind::kFetch:
        out << "    Fetch Operator\n      row keys: output of " << name(s.inputs.front())
            << "\n      columns: " << p.logical.describe_columns.size() << "\n";
        break;
    }
    if (s.finalize) {
      for (const auto& c : s.residual) {
        out << "          Filter Operator\n            predicate: " << cond_text(p, c) << "\n";
      }
      out << "          Select Operator\n            expressions:";
      for (std::size_t i = 0; i < s.items.size(); ++i) {
        out << " " << p.item_names[i] << "="
            << (s.items[i] ? views.at(s.items[i]->view).name + "." + s.items[i]->column : "NULL");
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace rdfpt::exec
