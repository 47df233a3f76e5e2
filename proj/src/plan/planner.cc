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

#include "rdfpt/plan/planner.h"

#include <algorithm>
#include <functional>

#include "rdfpt/error.h"

namespace rdfpt::plan {

using sparql::Branch;
using sparql::Filter;
using sparql::FilterKind;
using sparql::TriplePattern;

std::string term_name(const rdf::Term& term) {
  if (term.is_variable()) return "?" + term.value;
  if (term.is_uri()) return "<" + term.value;
  return {};
}

const SubjectEntry* SubjectTripleMap::find(const std::string& name) const {
  auto it = index.find(name);
  return it == index.end() ? nullptr : &entries[it->second];
}

std::set<std::string> SubjectTripleMap::key_set() const {
  std::set<std::string> out;
  for (const auto& e : entries) out.insert(e.name);
  return out;
}

const ViewColumn* ViewDef::column(const std::string& n) const {
  for (const auto& c : columns) {
    if (c.name == n) return &c;
  }
  return nullptr;
}

namespace {

// Patterns of a branch in pre-order with their scope.
std::vector<PatternRef> ordered_patterns(const Branch& b) {
  std::vector<PatternRef> out;
  for (std::size_t s = 0; s < b.scopes.size(); ++s) {
    for (const auto& tp : b.scopes[s].patterns) {
      out.push_back({static_cast<int>(s), static_cast<int>(out.size()), tp});
    }
  }
  return out;
}

}  // namespace

SubjectTripleMap build_subject_map(const Branch& branch) {
  SubjectTripleMap m;
  for (const PatternRef& p : ordered_patterns(branch)) {
    if (p.pattern.predicate.is_variable()) {
      throw UnsupportedFeature("variable predicate ?" + p.pattern.predicate.value);
    }
    std::string name = term_name(p.pattern.subject);
    auto [it, fresh] = m.index.emplace(name, static_cast<int>(m.entries.size()));
    if (fresh) {
      SubjectEntry e;
      e.subject = p.pattern.subject;
      e.name = name;
      e.home_scope = p.scope;
      m.entries.push_back(std::move(e));
    }
    SubjectEntry& e = m.entries[it->second];
    if (branch.scopes[p.scope].depth < branch.scopes[e.home_scope].depth) {
      e.home_scope = p.scope;
    }
    e.patterns.push_back(p);
  }
  return m;
}

std::string QueryPlan::display_uri(const std::string& full) const {
  if (auto parts = query.prefixes.split(full)) return parts->first + ":" + parts->second;
  if (auto parts = catalog.prefixes.split(full)) return parts->first + ":" + parts->second;
  return "<" + full + ">";
}

std::string QueryPlan::column_text(const ColumnRef& ref) const {
  const ViewDef& v = views.at(ref.view);
  if (ref.is_key()) return v.name + ".key";
  const ViewColumn* c = v.column(ref.column);
  if (c == nullptr) throw PlanningError("unknown column " + v.name + "." + ref.column);
  std::string suffix;
  if (auto hash = c->name.rfind('#'); hash != std::string::npos && c->name != c->storage) {
    suffix = c->name.substr(hash);
  }
  return v.name + "." + c->display + suffix;
}

LogicalPlan QueryPlan::logical() const {
  LogicalPlan out;
  out.views = views;
  out.scopes = scopes;
  out.folds = folds;
  out.output_names = output_names;
  out.describe_columns = describe_columns;
  out.root = root;
  out.limit = query.limit;
  return out;
}

std::size_t QueryPlan::join_count() const {
  std::size_t n = 0;
  for (const auto& b : branches) n += b.joins.size();
  return n;
}

namespace {

// Occurrence counts over all pattern positions of a branch.
std::map<std::string, int> name_counts(const Branch& b) {
  std::map<std::string, int> counts;
  for (const auto& s : b.scopes) {
    for (const auto& tp : s.patterns) {
      for (const auto* t : {&tp.subject, &tp.predicate, &tp.object}) {
        if (t->is_variable()) ++counts["?" + t->value];
      }
    }
  }
  return counts;
}

bool foldable(const Branch& b, int scope, const std::string& subject,
              const std::map<std::string, int>& counts) {
  for (const auto& tp : b.scopes[scope].patterns) {
    if (term_name(tp.subject) != subject) return false;
    if (!tp.object.is_variable()) return false;
    if (counts.at("?" + tp.object.value) != 1) return false;
  }
  for (int c : b.scopes[scope].children) {
    if (!foldable(b, c, subject, counts)) return false;
  }
  return true;
}

struct ViewSpec {
  int entry = -1;
  int scope = 0;  // local home scope
  bool fragment = false;
  std::vector<std::pair<PatternRef, int>> patterns;  // pattern, local fold scope or -1
  int first_order = 1 << 30;
};

}  // namespace

void make_views(QueryPlan& plan, BranchPlan& bp) {
  const Branch& b = bp.branch;
  const int branch_index = static_cast<int>(plan.branches.size());

  bp.scope_ids.clear();
  for (std::size_t s = 0; s < b.scopes.size(); ++s) {
    ScopeInfo info;
    info.branch = branch_index;
    info.local = static_cast<int>(s);
    info.parent = b.scopes[s].parent < 0 ? -1 : bp.scope_ids[b.scopes[s].parent];
    bp.scope_ids.push_back(static_cast<int>(plan.scopes.size()));
    plan.scopes.push_back(info);
  }

  bp.subjects = build_subject_map(b);
  auto counts = name_counts(b);

  // A DESCRIBE target that is never a subject gets its own view.
  const auto& q = plan.query;
  std::string bare_name;
  if (q.describe_target) {
    bare_name = term_name(*q.describe_target);
    if (bp.subjects.find(bare_name) == nullptr) {
      SubjectEntry e;
      e.subject = *q.describe_target;
      e.name = bare_name;
      e.home_scope = 0;
      bp.subjects.index.emplace(bare_name, static_cast<int>(bp.subjects.entries.size()));
      bp.subjects.entries.push_back(std::move(e));
    } else {
      bare_name.clear();
    }
  }

  std::vector<ViewSpec> specs;
  // (entry, local scope) -> spec index for scopes that own a view.
  std::map<std::pair<int, int>, int> spec_of;
  // local scope -> (spec index, local scope of the enclosing fold or -1)
  std::map<int, std::pair<int, int>> folded;

  for (std::size_t ei = 0; ei < bp.subjects.entries.size(); ++ei) {
    const SubjectEntry& e = bp.subjects.entries[ei];
    auto new_spec = [&](int scope, bool fragment) {
      ViewSpec spec;
      spec.entry = static_cast<int>(ei);
      spec.scope = scope;
      spec.fragment = fragment;
      spec_of[{static_cast<int>(ei), scope}] = static_cast<int>(specs.size());
      specs.push_back(std::move(spec));
      return static_cast<int>(specs.size()) - 1;
    };
    new_spec(e.home_scope, false);
    // Scopes in pre-order, so a parent is settled before its children.
    std::vector<int> scopes;
    for (const auto& p : e.patterns) {
      if (scopes.empty() || scopes.back() != p.scope) {
        if (std::find(scopes.begin(), scopes.end(), p.scope) == scopes.end()) {
          scopes.push_back(p.scope);
        }
      }
    }
    std::sort(scopes.begin(), scopes.end());
    for (int s : scopes) {
      if (s == e.home_scope || folded.count(s)) continue;
      int parent = b.scopes[s].parent;
      auto host = spec_of.find({static_cast<int>(ei), parent});
      if (host != spec_of.end() && foldable(b, s, e.name, counts)) {
        std::function<void(int, int)> fold = [&](int scope, int enclosing) {
          folded[scope] = {host->second, enclosing};
          for (int c : b.scopes[scope].children) fold(c, scope);
        };
        fold(s, -1);
      } else if (!spec_of.count({static_cast<int>(ei), s})) {
        new_spec(s, true);
      }
    }
    for (const auto& p : e.patterns) {
      if (auto f = folded.find(p.scope); f != folded.end()) {
        specs[f->second.first].patterns.push_back({p, p.scope});
      } else {
        specs[spec_of.at({static_cast<int>(ei), p.scope})].patterns.push_back({p, -1});
      }
    }
  }

  for (auto& spec : specs) {
    for (const auto& [p, fs] : spec.patterns) {
      spec.first_order = std::min(spec.first_order, p.order);
    }
  }
  std::vector<int> order(specs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
    return specs[a].first_order < specs[c].first_order;
  });

  // Fold groups are created per folded scope, in scope order.
  std::map<int, int> fold_id;  // local scope -> fold group id
  std::vector<int> spec_view(specs.size(), -1);
  for (int si : order) {
    ViewSpec& spec = specs[si];
    const SubjectEntry& e = bp.subjects.entries[spec.entry];
    ViewDef v;
    v.name = "R" + std::to_string(plan.views.size() + 1);
    v.subject = e.subject;
    v.branch = branch_index;
    v.scope = bp.scope_ids[spec.scope];
    v.fragment = spec.fragment;
    int view_index = static_cast<int>(plan.views.size());
    spec_view[si] = view_index;
    std::map<std::string, int> seen;
    std::sort(spec.patterns.begin(), spec.patterns.end(),
              [](const auto& a, const auto& c) { return a.first.order < c.first.order; });
    for (const auto& [p, fs] : spec.patterns) {
      const std::string& full = p.pattern.predicate.value;
      ViewColumn col;
      col.storage = plan.catalog.prefixes.compress(full);
      int n = ++seen[col.storage];
      col.name = n == 1 ? col.storage : col.storage + "#" + std::to_string(n);
      col.predicate = full;
      col.display = plan.display_uri(full);
      col.type = plan.catalog.types.type_of(col.storage);
      col.scope = bp.scope_ids[p.scope];
      if (fs >= 0) {
        auto it = fold_id.find(fs);
        if (it == fold_id.end()) {
          FoldGroup g;
          g.view = view_index;
          g.scope = bp.scope_ids[fs];
          int enclosing = folded.at(fs).second;
          g.parent = enclosing < 0 ? -1 : fold_id.at(enclosing);
          it = fold_id.emplace(fs, static_cast<int>(plan.folds.size())).first;
          plan.folds.push_back(g);
          plan.scopes[bp.scope_ids[fs]].fold = it->second;
        }
        col.fold = it->second;
        plan.folds[it->second].columns.push_back(col.name);
      }
      bp.pattern_columns[p.order] = ColumnRef{view_index, col.name};
      v.columns.push_back(std::move(col));
    }
    plan.views.push_back(std::move(v));
    bp.views.push_back(view_index);
    if (!bare_name.empty() && e.name == bare_name) bp.bare_views.push_back({bare_name, view_index});
  }

  // Guards: a folded scope matched iff its group's first column is set; any
  // other OPTIONAL matched iff its first view's key is set.
  for (std::size_t s = 1; s < b.scopes.size(); ++s) {
    ScopeInfo& info = plan.scopes[bp.scope_ids[s]];
    if (info.fold >= 0) {
      const FoldGroup& g = plan.folds[info.fold];
      info.guard = ColumnRef{g.view, g.columns.front()};
      continue;
    }
    for (int v : bp.views) {
      if (plan.views[v].scope == bp.scope_ids[s]) {
        info.guard = ColumnRef{v, std::string(kKeyColumn)};
        break;
      }
    }
  }
}

namespace {

// Where a name occurs in one scope.
struct Occurrence {
  ColumnRef column;
  int order = 0;
  bool subject = false;
};

std::vector<Occurrence> occurrences(const QueryPlan& plan, const BranchPlan& bp,
                                    int scope, const std::string& name) {
  std::vector<Occurrence> out;
  auto add = [&](ColumnRef ref, int order, bool subject) {
    for (const auto& o : out) {
      if (o.column == ref) return;
    }
    out.push_back({std::move(ref), order, subject});
  };
  int order = 0;
  for (std::size_t s = 0; s < bp.branch.scopes.size(); ++s) {
    for (const auto& tp : bp.branch.scopes[s].patterns) {
      if (static_cast<int>(s) == scope) {
        const ColumnRef& obj = bp.pattern_columns.at(order);
        if (term_name(tp.subject) == name) {
          add(ColumnRef{obj.view, std::string(kKeyColumn)}, order, true);
        }
        if (term_name(tp.object) == name) add(obj, order, false);
      }
      ++order;
    }
  }
  if (scope == 0) {
    for (const auto& [n, v] : bp.bare_views) {
      if (n == name) add(ColumnRef{v, std::string(kKeyColumn)}, -1, true);
    }
  }
  return out;
}

std::optional<ColumnRef> canonical(const std::vector<Occurrence>& occ) {
  for (const auto& o : occ) {
    if (o.subject) return o.column;
  }
  if (occ.empty()) return std::nullopt;
  return occ.front().column;
}

// Names (variables and subject constants) of one scope in order of first
// appearance.
std::vector<std::string> scope_names(const BranchPlan& bp, int scope,
                                     const std::set<std::string>& subjects) {
  std::vector<std::string> out;
  auto add = [&](const rdf::Term& t) {
    std::string n = term_name(t);
    if (n.empty()) return;
    if (t.is_uri() && !subjects.count(n)) return;
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  for (const auto& tp : bp.branch.scopes[scope].patterns) {
    add(tp.subject);
    add(tp.object);
  }
  if (scope == 0) {
    for (const auto& [n, v] : bp.bare_views) {
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
  }
  return out;
}

int shallowest_scope(const BranchPlan& bp, const std::string& name,
                     const std::set<std::string>& subjects) {
  int best = -1;
  for (std::size_t s = 0; s < bp.branch.scopes.size(); ++s) {
    auto names = scope_names(bp, static_cast<int>(s), subjects);
    if (std::find(names.begin(), names.end(), name) == names.end()) continue;
    if (best < 0 || bp.branch.scopes[s].depth < bp.branch.scopes[best].depth) {
      best = static_cast<int>(s);
    }
  }
  return best;
}

Condition column_eq(ColumnRef left, ColumnRef right) {
  Condition c;
  c.kind = CondKind::kColumnEq;
  c.left = std::move(left);
  c.right_column = std::move(right);
  return c;
}

Condition compare_const(ColumnRef col, rdf::CompareOp op, rdf::Value v) {
  Condition c;
  c.kind = CondKind::kCompare;
  c.left = std::move(col);
  c.op = op;
  c.constant = std::move(v);
  return c;
}

}  // namespace

std::vector<JoinEdge> detect_joins(const QueryPlan& plan, const BranchPlan& bp) {
  std::vector<JoinEdge> edges;
  const auto keys = bp.subjects.key_set();
  if (keys.size() < 2) return edges;
  // Main view of each subject.
  std::map<std::string, int> main_view;
  for (int v : bp.views) {
    const ViewDef& view = plan.views[v];
    if (!view.fragment) main_view.emplace(term_name(view.subject), v);
  }
  int order = 0;
  for (const auto& scope : bp.branch.scopes) {
    for (const auto& tp : scope.patterns) {
      int here = order++;
      std::string obj = term_name(tp.object);
      if (obj.empty() || !keys.count(obj) || obj == term_name(tp.subject)) continue;
      int left = bp.pattern_columns.at(here).view;
      int right = main_view.at(obj);
      if (left == right) continue;
      auto it = std::find_if(edges.begin(), edges.end(), [&](const JoinEdge& e) {
        return (e.left_view == left && e.right_view == right) ||
               (e.left_view == right && e.right_view == left);
      });
      if (it == edges.end()) {
        JoinEdge e;
        e.left_view = left;
        e.right_view = right;
        e.kind = plan.views[left].scope == plan.views[right].scope ? JoinKind::kInner
                                                                   : JoinKind::kLeftOuter;
        edges.push_back(e);
        it = edges.end() - 1;
      }
      if (it->left_view == left) it->left_columns.push_back(bp.pattern_columns.at(here).column);
    }
  }
  return edges;
}

std::map<std::string, ColumnRef> bind_variables(const QueryPlan& plan,
                                                const BranchPlan& bp) {
  std::map<std::string, ColumnRef> out;
  auto subjects = bp.subjects.key_set();
  std::set<std::string> vars;
  for (const auto& s : bp.branch.scopes) {
    auto v = sparql::variables_of(s.patterns);
    vars.insert(v.begin(), v.end());
  }
  for (const auto& [n, v] : bp.bare_views) {
    if (n[0] == '?') vars.insert(n.substr(1));
  }
  for (const auto& var : vars) {
    std::string name = "?" + var;
    int s = shallowest_scope(bp, name, subjects);
    auto col = canonical(occurrences(plan, bp, s, name));
    if (!col) throw PlanningError("cannot bind ?" + var);
    out.emplace(var, *col);
  }
  return out;
}

namespace {

struct ScopeConditions {
  // Selections per view, in the order they are stacked (innermost first).
  std::map<int, std::vector<std::pair<int, Condition>>> view_selects;
  // Equalities between two different views of the scope.
  std::vector<Condition> cross;
};

class BranchBuilder {
 public:
  BranchBuilder(QueryPlan& plan, BranchPlan& bp)
      : plan_(plan), bp_(bp), subjects_(bp.subjects.key_set()) {}

  AstPtr build() {
    conds_.resize(bp_.branch.scopes.size());
    for (std::size_t s = 0; s < bp_.branch.scopes.size(); ++s) {
      if (plan_.scopes[bp_.scope_ids[s]].fold < 0) collect(static_cast<int>(s));
    }
    push_filters();
    AstPtr tree = scope_tree(0);
    // Remaining FILTERs sit above every join, the first one innermost.
    for (auto& c : top_) tree = AstNode::select(std::move(c), tree);
    return tree;
  }

 private:
  void collect(int s) {
    ScopeConditions& sc = conds_[s];
    const auto& scope = bp_.branch.scopes[s];
    int parent = scope.parent;
    std::vector<std::string> parent_names;
    if (parent >= 0) parent_names = scope_names(bp_, parent, subjects_);

    for (const auto& name : scope_names(bp_, s, subjects_)) {
      auto occ = occurrences(plan_, bp_, s, name);
      auto canon = canonical(occ);
      int canon_order = 0;
      for (const auto& o : occ) {
        if (o.column == *canon) canon_order = o.order;
      }
      for (const auto& o : occ) {
        if (o.column == *canon) continue;
        if (o.column.view == canon->view) {
          sc.view_selects[o.column.view].push_back({o.order, column_eq(*canon, o.column)});
        } else {
          sc.cross.push_back(column_eq(*canon, o.column));
        }
      }
      // A constant subject is pinned where it is not linked to the parent.
      if (name[0] == '<' &&
          (parent < 0 || std::find(parent_names.begin(), parent_names.end(), name) ==
                             parent_names.end())) {
        sc.view_selects[canon->view].push_back(
            {canon_order, compare_const(*canon, rdf::CompareOp::kEq,
                                        rdf::Value::uri(name.substr(1)))});
      }
    }
    int order = 0;
    for (std::size_t t = 0; t < bp_.branch.scopes.size(); ++t) {
      for (const auto& tp : bp_.branch.scopes[t].patterns) {
        int here = order++;
        if (static_cast<int>(t) != s) continue;
        if (tp.object.is_variable() || subjects_.count(term_name(tp.object))) continue;
        const ColumnRef& col = bp_.pattern_columns.at(here);
        sc.view_selects[col.view].push_back(
            {here, compare_const(col, rdf::CompareOp::kEq, rdf::value_of(tp.object))});
      }
    }
    for (auto& [v, list] : sc.view_selects) {
      std::stable_sort(list.begin(), list.end(),
                       [](const auto& a, const auto& c) { return a.first < c.first; });
    }
  }

  ColumnRef filter_column(int scope, const std::string& var) {
    if (scope == 0) return bp_.bindings.at(var);
    auto col = canonical(occurrences(plan_, bp_, scope, "?" + var));
    if (!col) throw PlanningError("FILTER variable ?" + var + " has no column");
    return *col;
  }

  void push_filters() {
    for (std::size_t s = 0; s < bp_.branch.scopes.size(); ++s) {
      const ScopeInfo& info = plan_.scopes[bp_.scope_ids[s]];
      for (const Filter& f : bp_.branch.scopes[s].filters) {
        ColumnRef col = filter_column(static_cast<int>(s), f.variable);
        Condition c;
        c.left = col;
        switch (f.kind) {
          case FilterKind::kCompare:
            c = compare_const(col, f.op, rdf::value_of(f.constant));
            break;
          case FilterKind::kRegex:
            c.kind = CondKind::kRegex;
            c.pattern = f.pattern;
            c.flags = f.flags;
            break;
          case FilterKind::kBound:
            c.kind = f.negated ? CondKind::kNotBound : CondKind::kBound;
            break;
        }
        if (s > 0) c.guard = info.guard;
        const ViewDef& view = plan_.views[col.view];
        bool pushable = s == 0 && c.is_equality() && view.scope == bp_.scope_ids[0] &&
                        (col.is_key() || view.column(col.column)->fold < 0);
        if (pushable) {
          conds_[0].view_selects[col.view].push_back({1 << 30, c});
        } else {
          top_.push_back(std::move(c));
        }
      }
    }
  }

  AstPtr leaf(int view, int scope) {
    AstPtr n = AstNode::relation(view);
    auto it = conds_[scope].view_selects.find(view);
    if (it != conds_[scope].view_selects.end()) {
      for (const auto& [order, c] : it->second) n = AstNode::select(c, n);
    }
    return n;
  }

  bool linked_to_parent(int s, int view) const {
    int parent = bp_.branch.scopes[s].parent;
    if (parent < 0) return false;
    for (const auto& name : scope_names(bp_, parent, subjects_)) {
      for (const auto& o : occurrences(plan_, bp_, s, name)) {
        if (o.column.view == view) return true;
      }
    }
    return false;
  }

  AstPtr scope_tree(int s) {
    const int gid = bp_.scope_ids[s];
    std::vector<int> members;
    for (int v : bp_.views) {
      if (plan_.views[v].scope == gid) members.push_back(v);
    }
    if (members.empty()) throw PlanningError("scope without views");
    std::set<int> added{members.front()};
    AstPtr tree = leaf(members.front(), s);
    std::vector<int> rest(members.begin() + 1, members.end());
    const auto& cross = conds_[s].cross;
    while (!rest.empty()) {
      bool progressed = false;
      for (auto it = rest.begin(); it != rest.end(); ++it) {
        int m = *it;
        std::vector<Condition> on;
        for (const Condition& c : cross) {
          int a = c.left.view, b = c.right_column->view;
          if (a == m && added.count(b)) {
            on.push_back(column_eq(*c.right_column, c.left));
          } else if (b == m && added.count(a)) {
            on.push_back(c);
          }
        }
        if (on.empty()) continue;
        tree = AstNode::join_of(JoinKind::kInner, tree, leaf(m, s), std::move(on));
        added.insert(m);
        rest.erase(it);
        progressed = true;
        break;
      }
      if (!progressed) {
        // Inside an OPTIONAL, members that only meet through the enclosing
        // group are cross joined; the left outer join above carries their
        // conditions. Anything else is a real cartesian product.
        if (!linked_to_parent(s, rest.front()) ||
            std::none_of(added.begin(), added.end(),
                         [&](int v) { return linked_to_parent(s, v); })) {
          throw PlanningError("no join condition connects " + plan_.views[rest.front()].name +
                              " to the rest of its group (cartesian product)");
        }
        tree = AstNode::join_of(JoinKind::kInner, tree, leaf(rest.front(), s), {});
        added.insert(rest.front());
        rest.erase(rest.begin());
      }
    }
    auto own_names = scope_names(bp_, s, subjects_);
    for (int c : bp_.branch.scopes[s].children) {
      if (plan_.scopes[bp_.scope_ids[c]].fold >= 0) continue;
      std::vector<Condition> on;
      for (const auto& name : scope_names(bp_, c, subjects_)) {
        if (std::find(own_names.begin(), own_names.end(), name) == own_names.end()) continue;
        auto left = canonical(occurrences(plan_, bp_, s, name));
        auto right = canonical(occurrences(plan_, bp_, c, name));
        on.push_back(column_eq(*left, *right));
      }
      if (on.empty()) {
        throw PlanningError("OPTIONAL group shares no variable with its enclosing group");
      }
      tree = AstNode::join_of(JoinKind::kLeftOuter, tree, scope_tree(c), std::move(on));
    }
    return tree;
  }

  QueryPlan& plan_;
  BranchPlan& bp_;
  std::set<std::string> subjects_;
  std::vector<ScopeConditions> conds_;
  std::vector<Condition> top_;
};

}  // namespace

void build_ast(QueryPlan& plan) {
  const auto& q = plan.query;
  for (auto& bp : plan.branches) bp.tree = BranchBuilder(plan, bp).build();

  std::vector<std::string> sort_only;
  for (const auto& k : q.order_by) {
    if (std::find(q.projection.begin(), q.projection.end(), k.variable) ==
            q.projection.end() &&
        std::find(sort_only.begin(), sort_only.end(), k.variable) == sort_only.end()) {
      sort_only.push_back(k.variable);
    }
  }
  auto bound = [](const BranchPlan& bp, const std::string& var) -> std::optional<ColumnRef> {
    auto it = bp.bindings.find(var);
    if (it == bp.bindings.end()) return std::nullopt;
    return it->second;
  };

  AstPtr root;
  if (plan.describe()) {
    const BranchPlan& bp = plan.branches.front();
    const rdf::Term& target = *q.describe_target;
    ColumnRef col;
    if (target.is_variable()) {
      col = bp.bindings.at(target.value);
    } else {
      auto it = std::find_if(bp.views.begin(), bp.views.end(), [&](int v) {
        return !plan.views[v].fragment && plan.views[v].scope == bp.scope_ids[0] &&
               term_name(plan.views[v].subject) == term_name(target);
      });
      if (it == bp.views.end()) throw PlanningError("DESCRIBE target has no view");
      col = ColumnRef{*it, std::string(kKeyColumn)};
    }
    std::string name = target.is_variable() ? target.value : "<" + target.value + ">";
    root = AstNode::project({ProjectItem{name, col, false}}, bp.tree);
    root->describe = true;
    root = AstNode::dedup(root);
    plan.output_names = {target.is_variable() ? "?" + name : name};
    std::vector<std::pair<std::string, std::string>> cols;
    for (const auto& c : plan.catalog.columns) {
      cols.push_back({plan.catalog.prefixes.expand(c), c});
    }
    std::sort(cols.begin(), cols.end());
    for (const auto& [full, storage] : cols) {
      plan.describe_columns.push_back(storage);
      plan.output_names.push_back("<" + full + ">");
    }
  } else if (plan.branches.size() == 1) {
    const BranchPlan& bp = plan.branches.front();
    std::vector<ProjectItem> items;
    for (const auto& v : q.projection) items.push_back({v, bound(bp, v), false});
    for (const auto& v : sort_only) items.push_back({v, bound(bp, v), true});
    root = AstNode::project(std::move(items), bp.tree);
    for (const auto& v : q.projection) plan.output_names.push_back("?" + v);
  } else {
    std::vector<AstPtr> parts;
    for (const auto& bp : plan.branches) {
      std::vector<ProjectItem> items;
      for (const auto& v : q.projection) items.push_back({v, bound(bp, v), false});
      for (const auto& v : sort_only) items.push_back({v, bound(bp, v), false});
      parts.push_back(AstNode::project(std::move(items), bp.tree));
    }
    std::vector<ProjectItem> items;
    for (const auto& v : q.projection) items.push_back({v, std::nullopt, false});
    for (const auto& v : sort_only) items.push_back({v, std::nullopt, true});
    root = AstNode::project(std::move(items), AstNode::unite(std::move(parts)));
    for (const auto& v : q.projection) plan.output_names.push_back("?" + v);
  }
  if (!plan.describe() && q.dedup()) root = AstNode::dedup(root);
  if (!q.order_by.empty()) {
    std::vector<SortKey> keys;
    for (const auto& k : q.order_by) keys.push_back({k.variable, k.descending});
    root = AstNode::sort(std::move(keys), root);
  }
  plan.root = root;
}

QueryPlan plan_query(const sparql::SparqlQuery& query, const Catalog& catalog) {
  QueryPlan plan;
  plan.query = query;
  plan.catalog = catalog;
  auto branches = sparql::expand_branches(query.where);
  sparql::check_supported(query, branches);
  if (plan.describe() && !query.order_by.empty()) {
    throw UnsupportedFeature("ORDER BY with DESCRIBE");
  }
  for (auto& b : branches) {
    BranchPlan bp;
    bp.branch = std::move(b);
    make_views(plan, bp);
    bp.joins = detect_joins(plan, bp);
    bp.bindings = bind_variables(plan, bp);
    plan.branches.push_back(std::move(bp));
  }
  build_ast(plan);
  return plan;
}

std::size_t count_joins(const sparql::SparqlQuery& query, const Catalog& catalog) {
  return plan_query(query, catalog).join_count();
}

}  // namespace rdfpt::plan
