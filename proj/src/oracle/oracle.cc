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

#include "rdfpt/oracle/oracle.h"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <unordered_map>

#include "rdfpt/error.h"
#include "rdfpt/sparql/branches.h"

namespace rdfpt::oracle {

using rdf::Value;
using sparql::Filter;
using sparql::GraphPattern;
using sparql::TriplePattern;

namespace {

struct Group {
  std::vector<TriplePattern> patterns;
  std::vector<Filter> filters;
  std::vector<Group> optionals;
  int id = 0;
};

void merge_into(Group& into, const Group& from) {
  into.patterns.insert(into.patterns.end(), from.patterns.begin(), from.patterns.end());
  into.filters.insert(into.filters.end(), from.filters.begin(), from.filters.end());
  into.optionals.insert(into.optionals.end(), from.optionals.begin(), from.optionals.end());
}

std::vector<Group> alternatives(const GraphPattern& g) {
  Group base;
  base.patterns = g.patterns;
  base.filters = g.filters;
  for (const auto& opt : g.optionals) {
    auto alts = alternatives(opt);
    if (alts.size() != 1) throw UnsupportedFeature("UNION inside OPTIONAL");
    base.optionals.push_back(std::move(alts.front()));
  }
  std::vector<Group> out{base};
  for (const auto& [a, b] : g.unions) {
    auto left = alternatives(a);
    auto right = alternatives(b);
    left.insert(left.end(), right.begin(), right.end());
    std::vector<Group> next;
    for (const auto& cur : out) {
      for (const auto& alt : left) {
        Group merged = cur;
        merge_into(merged, alt);
        next.push_back(std::move(merged));
      }
    }
    if (next.size() > sparql::kMaxBranches) throw UnsupportedFeature("too many UNION alternatives");
    out = std::move(next);
  }
  return out;
}

void number(Group& g, int& next) {
  g.id = next++;
  for (auto& c : g.optionals) number(c, next);
}

using Binding = std::map<std::string, Value>;

struct Solution {
  Binding b;
  std::set<int> matched;  // OPTIONAL groups that contributed
};

class Evaluator {
 public:
  Evaluator(const TripleTable& t, OracleStats& s) : table_(t), stats_(s) {}

  std::vector<Solution> group(const Group& g) {
    std::vector<Solution> sols{Solution{}};
    bool first = true;
    for (const auto& tp : g.patterns) {
      auto m = match(tp);
      if (!first) ++stats_.self_joins;
      first = false;
      sols = join(sols, m, false, -1);
    }
    for (const auto& c : g.optionals) sols = join(sols, group(c), true, c.id);
    return sols;
  }

 private:
  std::vector<Solution> match(const TriplePattern& tp) {
    ++stats_.patterns;
    std::vector<Solution> out;
    for (const auto& t : table_.triples()) {
      if (t.predicate != tp.predicate.value) continue;
      Solution s;
      if (tp.subject.is_variable()) {
        s.b.emplace(tp.subject.value, Value::uri(t.subject));
      } else if (t.subject != tp.subject.value) {
        continue;
      }
      if (tp.object.is_variable()) {
        auto [it, fresh] = s.b.emplace(tp.object.value, t.object);
        if (!fresh && !rdf::values_equal(it->second, t.object)) continue;
      } else if (!rdf::values_equal(rdf::value_of(tp.object), t.object)) {
        continue;
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  static bool compatible(const Binding& a, const Binding& b) {
    for (const auto& [k, v] : b) {
      auto it = a.find(k);
      if (it != a.end() && !rdf::values_equal(it->second, v)) return false;
    }
    return true;
  }

  // Hash join on the variables bound on every row of both sides; the full
  // compatibility test still runs on each candidate pair.
  std::vector<Solution> join(const std::vector<Solution>& left,
                             const std::vector<Solution>& right, bool outer, int id) {
    auto common = [](const std::vector<Solution>& rows) {
      std::set<std::string> vars;
      bool first = true;
      for (const auto& r : rows) {
        std::set<std::string> mine;
        for (const auto& [k, v] : r.b) mine.insert(k);
        if (first) {
          vars = std::move(mine);
          first = false;
        } else {
          std::set<std::string> both;
          std::set_intersection(vars.begin(), vars.end(), mine.begin(), mine.end(),
                                std::inserter(both, both.begin()));
          vars = std::move(both);
        }
      }
      return vars;
    };
    std::set<std::string> lk = common(left), rk = common(right), keys;
    std::set_intersection(lk.begin(), lk.end(), rk.begin(), rk.end(),
                          std::inserter(keys, keys.begin()));
    auto key_of = [&](const Binding& b) {
      std::string k;
      for (const auto& v : keys) k += rdf::join_key(b.at(v)) + '\x1f';
      return k;
    };
    std::unordered_map<std::string, std::vector<const Solution*>> index;
    for (const auto& r : right) index[key_of(r.b)].push_back(&r);
    std::vector<Solution> out;
    for (const auto& l : left) {
      bool any = false;
      auto it = index.find(key_of(l.b));
      if (it != index.end()) {
        for (const Solution* r : it->second) {
          if (!compatible(l.b, r->b)) continue;
          any = true;
          Solution s = l;
          for (const auto& [k, v] : r->b) s.b.emplace(k, v);
          s.matched.insert(r->matched.begin(), r->matched.end());
          if (outer) s.matched.insert(id);
          out.push_back(std::move(s));
        }
      }
      if (!any && outer) out.push_back(l);
    }
    return out;
  }

  const TripleTable& table_;
  OracleStats& stats_;
};

bool filter_holds(const Filter& f, const Binding& b) {
  auto it = b.find(f.variable);
  const Value* v = it == b.end() ? nullptr : &it->second;
  switch (f.kind) {
    case sparql::FilterKind::kBound: return f.negated ? v == nullptr : v != nullptr;
    case sparql::FilterKind::kRegex: return v != nullptr && rdf::regex_match(*v, f.pattern, f.flags);
    case sparql::FilterKind::kCompare:
      return v != nullptr && rdf::compare_values(*v, f.op, rdf::value_of(f.constant));
  }
  return false;
}

// Root filters must hold; an OPTIONAL's filters must hold where it matched.
bool filters_hold(const Group& g, const Solution& s, bool root) {
  if (root || s.matched.count(g.id)) {
    for (const auto& f : g.filters) {
      if (!filter_holds(f, s.b)) return false;
    }
  }
  for (const auto& c : g.optionals) {
    if (!filters_hold(c, s, false)) return false;
  }
  return true;
}

struct Row {
  std::vector<std::optional<Value>> visible;
  std::vector<std::optional<Value>> keys;
};

int key_compare(const Row& a, const Row& b, const std::vector<sparql::OrderKey>& order) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Value* x = a.keys[i] ? &*a.keys[i] : nullptr;
    const Value* y = b.keys[i] ? &*b.keys[i] : nullptr;
    int c = rdf::compare_for_order(x, y);
    if (c != 0) return order[i].descending ? -c : c;
  }
  return 0;
}

std::string row_text(const Row& r) {
  std::string s;
  for (const auto& v : r.visible) s += rdf::render(v) + '\t';
  return s;
}

}  // namespace

exec::ResultSet oracle_eval(const sparql::SparqlQuery& query, const TripleTable& table,
                            OracleStats* stats) {
  sparql::check_supported(query);
  if (query.form == sparql::QueryForm::kDescribe && !query.order_by.empty()) {
    throw UnsupportedFeature("ORDER BY with DESCRIBE");
  }
  OracleStats local;
  OracleStats& st = stats ? *stats : local;
  auto groups = alternatives(query.where);

  std::vector<Solution> all;
  for (auto& g : groups) {
    int next = 0;
    number(g, next);
    Evaluator ev(table, st);
    for (auto& s : ev.group(g)) {
      if (filters_hold(g, s, true)) all.push_back(std::move(s));
    }
  }

  exec::ResultSet out;
  if (query.form == sparql::QueryForm::kDescribe) {
    const rdf::Term& target = *query.describe_target;
    std::set<std::string> preds;
    for (const auto& t : table.triples()) preds.insert(t.predicate);
    out.header.push_back(target.is_variable() ? "?" + target.value : "<" + target.value + ">");
    for (const auto& p : preds) out.header.push_back("<" + p + ">");
    std::set<std::string> targets;
    for (const auto& s : all) {
      if (!target.is_variable()) {
        targets.insert(target.value);
        continue;
      }
      auto it = s.b.find(target.value);
      if (it != s.b.end() && it->second.kind == rdf::ValueKind::kUri) {
        targets.insert(it->second.lexical);
      }
    }
    for (const auto& subject : targets) {
      std::map<std::string, std::vector<Value>> cells;
      for (const auto& t : table.triples()) {
        if (t.subject == subject) cells[t.predicate].push_back(t.object);
      }
      if (cells.empty()) continue;
      exec::ResultRow row;
      row.cells.push_back(rdf::render(Value::uri(subject)));
      for (const auto& p : preds) {
        auto it = cells.find(p);
        row.cells.push_back(exec::render_list(it == cells.end() ? std::vector<Value>{} : it->second));
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }

  for (const auto& v : query.projection) out.header.push_back("?" + v);
  std::vector<Row> rows;
  for (const auto& s : all) {
    Row r;
    auto lookup = [&](const std::string& v) -> std::optional<Value> {
      auto it = s.b.find(v);
      if (it == s.b.end()) return std::nullopt;
      return it->second;
    };
    for (const auto& v : query.projection) r.visible.push_back(lookup(v));
    for (const auto& k : query.order_by) r.keys.push_back(lookup(k.variable));
    rows.push_back(std::move(r));
  }
  if (query.dedup()) {
    std::map<std::string, std::size_t> seen;
    std::vector<Row> kept;
    for (auto& r : rows) {
      auto [it, fresh] = seen.emplace(row_text(r), kept.size());
      if (fresh) {
        kept.push_back(std::move(r));
      } else if (key_compare(r, kept[it->second], query.order_by) < 0) {
        kept[it->second] = std::move(r);
      }
    }
    rows = std::move(kept);
  }
  if (!query.order_by.empty()) {
    std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
      return key_compare(a, b, query.order_by) < 0;
    });
  }
  if (query.limit && rows.size() > *query.limit) rows.resize(*query.limit);
  for (const auto& r : rows) {
    exec::ResultRow row;
    for (const auto& v : r.visible) row.cells.push_back(rdf::render(v));
    row.sort_keys = r.keys;
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::size_t oracle_join_count(const sparql::SparqlQuery& query) {
  auto name = [](const rdf::Term& t) {
    return (t.is_variable() ? "?" : "<") + t.value;
  };
  std::size_t total = 0;
  for (const auto& g : alternatives(query.where)) {
    std::set<std::string> subjects;
    std::function<void(const Group&)> walk = [&](const Group& grp) {
      for (const auto& tp : grp.patterns) subjects.insert(name(tp.subject));
      for (const auto& c : grp.optionals) walk(c);
    };
    walk(g);
    if (query.describe_target) subjects.insert(name(*query.describe_target));
    if (subjects.size() > 1) total += subjects.size() - 1;
  }
  return total;
}

}  // namespace rdfpt::oracle
