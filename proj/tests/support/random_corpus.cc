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

#include "random_corpus.h"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

namespace rdfpt::testing {

namespace {

const std::vector<std::string> kWords = {"alpha", "beta",  "gamma", "delta",
                                         "alphabet", "Beta", "omega", "meta"};

bool coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::string date_text(int day) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "2024-01-%02d", day);
  return buf;
}

std::string object_nt(std::mt19937_64& rng, ObjectKind kind, std::size_t subjects) {
  switch (kind) {
    case ObjectKind::kLink:
      return "<" + std::string(kExampleNs) + "s" + std::to_string(pick(rng, subjects + 3)) + ">";
    case ObjectKind::kInteger:
      return "\"" + std::to_string(pick(rng, 20)) +
             "\"^^<http://www.w3.org/2001/XMLSchema#integer>";
    case ObjectKind::kString:
      return "\"" + kWords[pick(rng, kWords.size())] + "\"";
    case ObjectKind::kDate:
      return "\"" + date_text(1 + static_cast<int>(pick(rng, 28))) +
             "\"^^<http://www.w3.org/2001/XMLSchema#date>";
  }
  return {};
}

struct Var {
  std::string name;  // with '?'
  ObjectKind kind;
};

struct Group {
  std::vector<std::string> lines;
  std::vector<std::string> filters;
  std::vector<Group> optionals;
  std::vector<std::pair<Group, Group>> unions;
  std::vector<Var> own;  // variables of this group's patterns

  void use(const Var& v) {
    for (const auto& o : own) {
      if (o.name == v.name) return;
    }
    own.push_back(v);
  }
};

class Builder {
 public:
  Builder(std::mt19937_64& rng, const RandomDataset& data, const QueryLimits& limits)
      : rng_(rng), data_(data), limits_(limits) {}

  std::string build();

 private:
  Var fresh(ObjectKind kind) {
    Var v{"?v" + std::to_string(next_++), kind};
    vars_.push_back(v);
    return v;
  }

  std::string predicate(std::size_t p) const { return "ex:p" + std::to_string(p); }

  // A constant subject is a join point, so each one is used in a single
  // pattern and never as an object constant; that keeps OPTIONALs from
  // sharing it with anything but their own group.
  std::string constant_subject() {
    std::size_t k = pick(rng_, data_.subjects);
    while (link_constants_.count(k)) k = (k + 1) % (data_.subjects + 8);
    link_constants_.insert(k);
    subject_constants_.insert(k);
    return "ex:s" + std::to_string(k);
  }

  std::string constant(ObjectKind kind, bool in_pattern = true) {
    switch (kind) {
      case ObjectKind::kLink: {
        std::size_t k = pick(rng_, data_.subjects);
        while (subject_constants_.count(k)) k = (k + 1) % (data_.subjects + 8);
        if (in_pattern) link_constants_.insert(k);
        return "ex:s" + std::to_string(k);
      }
      case ObjectKind::kInteger: return std::to_string(pick(rng_, 20));
      case ObjectKind::kString: return "\"" + kWords[pick(rng_, kWords.size())] + "\"";
      case ObjectKind::kDate:
        return "\"" + date_text(1 + static_cast<int>(pick(rng_, 28))) +
               "\"^^<http://www.w3.org/2001/XMLSchema#date>";
    }
    return {};
  }

  std::vector<std::size_t> predicates_of(ObjectKind kind) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < data_.predicate_kinds.size(); ++p) {
      if (data_.predicate_kinds[p] == kind) out.push_back(p);
    }
    return out;
  }

  static std::vector<Var> of_kind(const std::vector<Var>& vars, ObjectKind kind) {
    std::vector<Var> out;
    for (const auto& v : vars) {
      if (v.kind == kind) out.push_back(v);
    }
    return out;
  }

  std::string object_for(Group& g, const std::vector<Var>& visible, ObjectKind kind) {
    double r = std::uniform_real_distribution<double>(0, 1)(rng_);
    auto same = of_kind(visible, kind);
    if (r < 0.15 && !same.empty()) {
      Var v = same[pick(rng_, same.size())];
      g.use(v);
      return v.name;
    }
    if (r < 0.32) return constant(kind);
    Var v = fresh(kind);
    g.use(v);
    return v.name;
  }

  // One pattern. With `connect`, it shares a variable with `visible`.
  void add_pattern(Group& g, std::vector<Var> visible, bool connect,
                   const Var* subject_hint = nullptr) {
    for (const auto& v : g.own) visible.push_back(v);
    auto links = of_kind(visible, ObjectKind::kLink);
    std::size_t p = pick(rng_, data_.predicate_kinds.size());
    ObjectKind kind = data_.predicate_kinds[p];
    if (!connect) {
      std::string subject;
      if (subject_hint != nullptr) {
        subject = subject_hint->name;
        g.use(*subject_hint);
      } else if (coin(rng_, 0.1)) {
        // A constant subject needs a variable object to connect through.
        Var o = fresh(kind);
        g.use(o);
        g.lines.push_back(constant_subject() + " " + predicate(p) + " " + o.name + " .");
        return;
      } else {
        Var s = fresh(ObjectKind::kLink);
        g.use(s);
        subject = s.name;
      }
      g.lines.push_back(subject + " " + predicate(p) + " " + object_for(g, visible, kind) + " .");
      return;
    }
    double r = std::uniform_real_distribution<double>(0, 1)(rng_);
    auto link_preds = predicates_of(ObjectKind::kLink);
    if (!links.empty() && (r < 0.7 || link_preds.empty())) {
      Var s = links[pick(rng_, links.size())];
      g.use(s);
      g.lines.push_back(s.name + " " + predicate(p) + " " + object_for(g, visible, kind) + " .");
      return;
    }
    if (!links.empty() && r < 0.88) {
      // New subject pointing at a known one.
      Var o = links[pick(rng_, links.size())];
      Var s = fresh(ObjectKind::kLink);
      g.use(s);
      g.use(o);
      g.lines.push_back(s.name + " " + predicate(link_preds[pick(rng_, link_preds.size())]) +
                        " " + o.name + " .");
      return;
    }
    // Constant subject sharing an object variable.
    auto same = of_kind(visible, kind);
    if (same.empty()) {
      if (links.empty()) {
        // Nothing to attach to; fall back to the first visible variable's kind.
        const Var& v = visible.front();
        auto preds = predicates_of(v.kind);
        g.use(v);
        g.lines.push_back(constant_subject() + " " + predicate(preds[pick(rng_, preds.size())]) +
                          " " + v.name + " .");
        return;
      }
      Var s = links[pick(rng_, links.size())];
      g.use(s);
      g.lines.push_back(s.name + " " + predicate(p) + " " + object_for(g, visible, kind) + " .");
      return;
    }
    Var o = same[pick(rng_, same.size())];
    g.use(o);
    g.lines.push_back(constant_subject() + " " + predicate(p) + " " + o.name + " .");
  }

  std::string filter_on(const Var& v, bool allow_bound) {
    static const char* ops[] = {"=", "!=", "<", ">", "<=", ">="};
    if (allow_bound && coin(rng_, 0.4)) {
      return std::string("FILTER (") + (coin(rng_, 0.5) ? "!" : "") + "bound(" + v.name + "))";
    }
    switch (v.kind) {
      case ObjectKind::kLink:
        return "FILTER (" + v.name + (coin(rng_, 0.5) ? " = " : " != ") +
               constant(ObjectKind::kLink, false) + ")";
      case ObjectKind::kString:
        if (coin(rng_, 0.5)) {
          static const char* patterns[] = {"^al", "ta$", "et", "a.p", "^(al|be)", "ph?a", "^beta$"};
          std::string pat = patterns[pick(rng_, 7)];
          if (coin(rng_, 0.25)) return "FILTER regex(" + v.name + ", \"" + pat + "\", \"i\")";
          return "FILTER regex(" + v.name + ", \"" + pat + "\")";
        }
        [[fallthrough]];
      default: {
        if (coin(rng_, 0.15)) {
          // Constant on the left.
          return "FILTER (" + constant(v.kind, false) + " " + ops[pick(rng_, 6)] + " " + v.name +
                 ")";
        }
        return "FILTER (" + v.name + " " + ops[pick(rng_, 6)] + " " + constant(v.kind, false) +
               ")";
      }
    }
  }

  Group make_optional(const Group& parent, std::size_t& budget, int depth) {
    Group g;
    std::size_t n = std::min<std::size_t>(budget, coin(rng_, 0.35) ? 2 : 1);
    budget -= n;
    for (std::size_t i = 0; i < n; ++i) add_pattern(g, parent.own, true);
    if (coin(rng_, limits_.filter_rate * 0.6)) {
      g.filters.push_back(filter_on(g.own[pick(rng_, g.own.size())], false));
    }
    if (depth < 2 && budget > 0 && coin(rng_, 0.3)) {
      g.optionals.push_back(make_optional(g, budget, depth + 1));
    }
    return g;
  }

  void render(const Group& g, int indent, std::ostringstream& out) const {
    std::string pad(indent, ' ');
    for (const auto& l : g.lines) out << pad << l << "\n";
    for (const auto& [a, b] : g.unions) {
      out << pad << "{\n";
      render(a, indent + 2, out);
      out << pad << "} UNION {\n";
      render(b, indent + 2, out);
      out << pad << "}\n";
    }
    for (const auto& o : g.optionals) {
      out << pad << "OPTIONAL {\n";
      render(o, indent + 2, out);
      out << pad << "}\n";
    }
    for (const auto& f : g.filters) out << pad << f << "\n";
  }

  std::mt19937_64& rng_;
  const RandomDataset& data_;
  const QueryLimits& limits_;
  int next_ = 0;
  std::vector<Var> vars_;
  std::set<std::size_t> link_constants_;     // URIs used as constants in patterns
  std::set<std::size_t> subject_constants_;
};

std::string Builder::build() {
  std::size_t total = 1 + pick(rng_, limits_.max_patterns);
  Group root;
  std::vector<Var> root_scope;  // variables usable by root filters
  bool is_union = total >= 2 && coin(rng_, limits_.union_rate);
  if (is_union) {
    if (total >= 3 && coin(rng_, 0.5)) {
      add_pattern(root, {}, false);
      --total;
    }
    std::size_t left = 1 + pick(rng_, total - 1);
    std::size_t right = total - left;
    Group a, b;
    std::optional<Var> hint;
    for (auto [alt, n] : {std::pair<Group*, std::size_t>{&a, left}, {&b, right}}) {
      for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 && root.lines.empty()) {
          if (hint && coin(rng_, 0.75)) {
            add_pattern(*alt, {}, false, &*hint);
          } else {
            add_pattern(*alt, {}, false);
            auto links = of_kind(alt->own, ObjectKind::kLink);
            if (!links.empty()) hint = links.front();
          }
        } else {
          add_pattern(*alt, root.own, true);
        }
      }
      if (coin(rng_, limits_.filter_rate * 0.5)) {
        alt->filters.push_back(filter_on(alt->own[pick(rng_, alt->own.size())], false));
      }
    }
    root.unions.push_back({std::move(a), std::move(b)});
    root_scope = root.own;
  } else {
    std::size_t required = 1 + pick(rng_, total);
    add_pattern(root, {}, false);
    for (std::size_t i = 1; i < required; ++i) add_pattern(root, {}, true);
    std::size_t budget = total - required;
    root_scope = root.own;
    std::vector<Var> optional_vars;
    while (budget > 0 && coin(rng_, limits_.optional_rate)) {
      std::size_t before = next_;
      root.optionals.push_back(make_optional(root, budget, 1));
      for (const auto& v : vars_) {
        if (std::stoul(v.name.substr(2)) >= before) optional_vars.push_back(v);
      }
    }
    if (!optional_vars.empty() && coin(rng_, 0.5)) {
      root.filters.push_back(filter_on(optional_vars[pick(rng_, optional_vars.size())], true));
    }
  }
  if (!root_scope.empty() && coin(rng_, limits_.filter_rate)) {
    root.filters.push_back(filter_on(root_scope[pick(rng_, root_scope.size())], false));
  }

  std::ostringstream out;
  out << "PREFIX ex: <" << kExampleNs << ">\n";
  auto root_links = of_kind(root.own, ObjectKind::kLink);
  bool describe = !is_union && !root_links.empty() && coin(rng_, limits_.describe_rate);
  if (describe) {
    out << "DESCRIBE " << root_links[pick(rng_, root_links.size())].name << "\nWHERE {\n";
    render(root, 2, out);
    out << "}\n";
    return out.str();
  }
  out << "SELECT ";
  double m = std::uniform_real_distribution<double>(0, 1)(rng_);
  if (m < 0.25) {
    out << "DISTINCT ";
  } else if (m < 0.3) {
    out << "REDUCED ";
  }
  if (vars_.empty() || coin(rng_, 0.15)) {
    out << "*";
  } else {
    std::vector<Var> chosen;
    for (const auto& v : vars_) {
      if (coin(rng_, 0.6)) chosen.push_back(v);
    }
    if (chosen.empty()) chosen.push_back(vars_[pick(rng_, vars_.size())]);
    for (std::size_t i = 0; i < chosen.size(); ++i) out << (i ? " " : "") << chosen[i].name;
  }
  out << "\nWHERE {\n";
  render(root, 2, out);
  out << "}\n";
  if (!vars_.empty() && coin(rng_, 0.35)) {
    out << "ORDER BY";
    std::size_t keys = 1 + pick(rng_, std::min<std::size_t>(2, vars_.size()));
    for (std::size_t i = 0; i < keys; ++i) {
      const Var& v = vars_[pick(rng_, vars_.size())];
      out << (coin(rng_, 0.3) ? " DESC(" + v.name + ")" : " " + v.name);
    }
    out << "\n";
  }
  if (coin(rng_, 0.25)) out << "LIMIT " << 1 + pick(rng_, 10) << "\n";
  return out.str();
}

}  // namespace

RandomDataset random_dataset(std::mt19937_64& rng, const DatasetLimits& limits) {
  RandomDataset d;
  std::size_t np = 3 + pick(rng, limits.max_predicates - 2);
  d.predicate_kinds.push_back(ObjectKind::kLink);
  for (std::size_t p = 1; p < np; ++p) {
    double r = std::uniform_real_distribution<double>(0, 1)(rng);
    d.predicate_kinds.push_back(r < 0.3   ? ObjectKind::kLink
                                : r < 0.6 ? ObjectKind::kInteger
                                : r < 0.9 ? ObjectKind::kString
                                          : ObjectKind::kDate);
  }
  d.subjects = 5 + pick(rng, limits.max_subjects - 4);
  d.triples = 10 + pick(rng, limits.max_triples - 9);
  std::ostringstream out;
  for (std::size_t i = 0; i < d.triples; ++i) {
    std::size_t s = pick(rng, d.subjects);
    std::size_t p = pick(rng, np);
    out << "<" << kExampleNs << "s" << s << "> <" << kExampleNs << "p" << p << "> "
        << object_nt(rng, d.predicate_kinds[p], d.subjects) << " .\n";
  }
  d.ntriples = out.str();
  d.prefixes.add("ex", kExampleNs);
  return d;
}

std::string random_query(std::mt19937_64& rng, const RandomDataset& data,
                         const QueryLimits& limits) {
  return Builder(rng, data, limits).build();
}

}  // namespace rdfpt::testing
