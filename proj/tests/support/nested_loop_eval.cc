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

#include "nested_loop_eval.h"

#include <algorithm>
#include <map>
#include <set>

namespace rdfpt::testing {

using rdf::Value;
using sparql::Filter;
using sparql::GraphPattern;
using sparql::TriplePattern;

namespace {

// Union-free alternative: required patterns, the filters that always apply,
// and OPTIONAL children in evaluation order.
struct Alt {
  std::vector<TriplePattern> patterns;
  std::vector<const Filter*> filters;
  std::vector<Alt> optionals;
};

std::vector<Alt> flatten(const GraphPattern& g) {
  std::vector<Alt> out(1);
  out[0].patterns = g.patterns;
  for (const auto& f : g.filters) out[0].filters.push_back(&f);
  for (const auto& o : g.optionals) out[0].optionals.push_back(flatten(o).at(0));
  for (const auto& [a, b] : g.unions) {
    std::vector<Alt> choices = flatten(a);
    for (auto& c : flatten(b)) choices.push_back(std::move(c));
    std::vector<Alt> next;
    for (const auto& cur : out) {
      for (const auto& c : choices) {
        Alt m = cur;
        m.patterns.insert(m.patterns.end(), c.patterns.begin(), c.patterns.end());
        m.filters.insert(m.filters.end(), c.filters.begin(), c.filters.end());
        m.optionals.insert(m.optionals.end(), c.optionals.begin(), c.optionals.end());
        next.push_back(std::move(m));
      }
    }
    out = std::move(next);
  }
  return out;
}

struct State {
  std::map<std::string, Value> b;
  std::vector<const Filter*> pending;  // filters of groups that took part
};

class Walker {
 public:
  explicit Walker(const oracle::TripleTable& t) : table_(t) {}

  // All extensions of `s` by the required patterns from index i on.
  void patterns(const std::vector<TriplePattern>& ps, std::size_t i, const State& s,
                std::vector<State>& out) const {
    if (i == ps.size()) {
      out.push_back(s);
      return;
    }
    const TriplePattern& tp = ps[i];
    for (const auto& t : table_.triples()) {
      if (t.predicate != tp.predicate.value) continue;
      State next = s;
      if (!bind(next, tp.subject, Value::uri(t.subject))) continue;
      if (!bind(next, tp.object, t.object)) continue;
      patterns(ps, i + 1, next, out);
    }
  }

  std::vector<State> group(const Alt& a, const State& in) const {
    std::vector<State> rows;
    patterns(a.patterns, 0, in, rows);
    for (auto& r : rows) r.pending.insert(r.pending.end(), a.filters.begin(), a.filters.end());
    for (const auto& opt : a.optionals) {
      std::vector<State> next;
      for (const auto& r : rows) {
        auto ext = group(opt, r);
        if (ext.empty()) {
          next.push_back(r);
        } else {
          for (auto& e : ext) next.push_back(std::move(e));
        }
      }
      rows = std::move(next);
    }
    return rows;
  }

 private:
  static bool bind(State& s, const rdf::Term& term, const Value& v) {
    if (!term.is_variable()) return rdf::values_equal(rdf::value_of(term), v);
    auto it = s.b.find(term.value);
    if (it == s.b.end()) {
      s.b.emplace(term.value, v);
      return true;
    }
    return rdf::values_equal(it->second, v);
  }

  const oracle::TripleTable& table_;
};

bool holds(const Filter& f, const std::map<std::string, Value>& b) {
  auto it = b.find(f.variable);
  if (f.kind == sparql::FilterKind::kBound) return (it != b.end()) != f.negated;
  if (it == b.end()) return false;
  if (f.kind == sparql::FilterKind::kRegex) return rdf::regex_match(it->second, f.pattern, f.flags);
  return rdf::compare_values(it->second, f.op, rdf::value_of(f.constant));
}

using Cells = std::vector<std::optional<Value>>;

int order_cmp(const Cells& a, const Cells& b, const std::vector<sparql::OrderKey>& keys) {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    int c = rdf::compare_for_order(a[i] ? &*a[i] : nullptr, b[i] ? &*b[i] : nullptr);
    if (c != 0) return keys[i].descending ? -c : c;
  }
  return 0;
}

}  // namespace

exec::ResultSet nested_loop_eval(const sparql::SparqlQuery& query,
                                 const oracle::TripleTable& table) {
  Walker w(table);
  std::vector<State> rows;
  for (const auto& alt : flatten(query.where)) {
    for (auto& s : w.group(alt, State{})) {
      bool ok = std::all_of(s.pending.begin(), s.pending.end(),
                            [&](const Filter* f) { return holds(*f, s.b); });
      if (ok) rows.push_back(std::move(s));
    }
  }

  exec::ResultSet out;
  if (query.form == sparql::QueryForm::kDescribe) {
    const rdf::Term& t = *query.describe_target;
    out.header.push_back(t.is_variable() ? "?" + t.value : "<" + t.value + ">");
    std::set<std::string> preds, targets;
    for (const auto& tr : table.triples()) preds.insert(tr.predicate);
    for (const auto& p : preds) out.header.push_back("<" + p + ">");
    for (const auto& s : rows) {
      if (!t.is_variable()) {
        targets.insert(t.value);
      } else if (auto it = s.b.find(t.value);
                 it != s.b.end() && it->second.kind == rdf::ValueKind::kUri) {
        targets.insert(it->second.lexical);
      }
    }
    for (const auto& target : targets) {
      exec::ResultRow row;
      row.cells.push_back(rdf::render(Value::uri(target)));
      bool any = false;
      for (const auto& p : preds) {
        std::vector<Value> vals;
        for (const auto& tr : table.triples()) {
          if (tr.subject == target && tr.predicate == p) vals.push_back(tr.object);
        }
        any = any || !vals.empty();
        row.cells.push_back(exec::render_list(vals));
      }
      if (any) out.rows.push_back(std::move(row));
    }
    return out;
  }

  for (const auto& v : query.projection) out.header.push_back("?" + v);
  struct Out {
    std::vector<std::string> cells;
    Cells keys;
  };
  std::vector<Out> result;
  auto get = [](const State& s, const std::string& v) -> std::optional<Value> {
    auto it = s.b.find(v);
    if (it == s.b.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& s : rows) {
    Out o;
    for (const auto& v : query.projection) o.cells.push_back(rdf::render(get(s, v)));
    for (const auto& k : query.order_by) o.keys.push_back(get(s, k.variable));
    result.push_back(std::move(o));
  }
  if (query.dedup()) {
    // Quadratic on purpose: no hashing shared with the oracle.
    std::vector<Out> kept;
    for (auto& o : result) {
      auto it = std::find_if(kept.begin(), kept.end(),
                             [&](const Out& k) { return k.cells == o.cells; });
      if (it == kept.end()) {
        kept.push_back(std::move(o));
      } else if (order_cmp(o.keys, it->keys, query.order_by) < 0) {
        *it = std::move(o);
      }
    }
    result = std::move(kept);
  }
  if (!query.order_by.empty()) {
    std::stable_sort(result.begin(), result.end(), [&](const Out& a, const Out& b) {
      return order_cmp(a.keys, b.keys, query.order_by) < 0;
    });
  }
  if (query.limit && result.size() > *query.limit) result.resize(*query.limit);
  for (auto& o : result) out.rows.push_back({std::move(o.cells), std::move(o.keys)});
  return out;
}

}  // namespace rdfpt::testing
