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

#include "rdfpt/exec/executor.h"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "rdfpt/error.h"
#include "rdfpt/mr/engine.h"
#include "rdfpt/sql/regex_translate.h"

namespace rdfpt::exec {

using plan::ColumnRef;
using plan::Condition;
using plan::CondKind;
using rdf::Value;

namespace {

// One view's row. Columns hold all values until expanded.
struct Slot {
  std::string key;  // full URI
  std::map<std::string, std::vector<Value>> cols;
};
using SlotPtr = std::shared_ptr<const Slot>;

struct Tuple {
  std::vector<SlotPtr> slots;  // by view index; null when absent
};

struct OutRow {
  std::vector<Cell> values;  // aligned with the root items
};

struct Tagged {
  int side = 0;
  Tuple tuple;
};

template <class T>
using Splits = std::vector<std::vector<T>>;

Cell get(const Tuple& t, const ColumnRef& ref) {
  const SlotPtr& slot = t.slots.at(static_cast<std::size_t>(ref.view));
  if (!slot) return std::nullopt;
  if (ref.is_key()) return Value::uri(slot->key);
  auto it = slot->cols.find(ref.column);
  if (it == slot->cols.end() || it->second.empty()) return std::nullopt;
  if (it->second.size() > 1) {
    throw PlanningError("column " + ref.column + " read as a single value but holds a list");
  }
  return it->second.front();
}

bool holds(const Tuple& t, const Condition& c) {
  if (c.guard && !get(t, *c.guard)) return true;
  Cell v = get(t, c.left);
  switch (c.kind) {
    case CondKind::kCompare: return v && rdf::compare_values(*v, c.op, *c.constant);
    case CondKind::kColumnEq: {
      Cell w = get(t, *c.right_column);
      return v && w && rdf::values_equal(*v, *w);
    }
    case CondKind::kRegex: {
      if (!v || v->kind != rdf::ValueKind::kString) return false;
      if (!sql::like_match(v->lexical, sql::translate_regex(c.pattern, c.flags).like)) {
        return false;
      }
      return rdf::regex_match(*v, c.pattern, c.flags);
    }
    case CondKind::kBound: return v.has_value();
    case CondKind::kNotBound: return !v.has_value();
  }
  return false;
}

std::size_t tuple_bytes(const Tuple& t) {
  std::size_t n = 0;
  for (const auto& s : t.slots) {
    if (!s) continue;
    n += s->key.size();
    for (const auto& [c, vs] : s->cols) {
      for (const auto& v : vs) n += v.lexical.size();
    }
  }
  return n;
}

int sort_compare(const OutRow& a, const OutRow& b,
                 const std::vector<std::pair<std::size_t, bool>>& keys) {
  for (const auto& [i, desc] : keys) {
    const Value* x = a.values[i] ? &*a.values[i] : nullptr;
    const Value* y = b.values[i] ? &*b.values[i] : nullptr;
    int c = rdf::compare_for_order(x, y);
    if (c != 0) return desc ? -c : c;
  }
  return 0;
}

class Runner {
 public:
  Runner(const storage::PropertyTable& table, const PhysicalPlan& plan, const ExecOptions& o)
      : table_(table), plan_(plan), opt_(o) {
    if (opt_.reducers == 0) throw InvalidArgument("reducer count must be >= 1");
  }

  ExecResult run() {
    for (const Stage& s : plan_.stages) {
      StageMetrics m;
      m.id = s.id;
      m.kind = std::string(stage_kind_name(s.kind));
      m.name = stage_name(s);
      switch (s.kind) {
        case StageKind::kScan: scan(s, m); break;
        case StageKind::kJoin: join(s, m); break;
        case StageKind::kFinalize: finalize_stage(s, m); break;
        case StageKind::kUnion: union_stage(s, m); break;
        case StageKind::kDedup: dedup(s, m); break;
        case StageKind::kSort: sort(s, m); break;
        case StageKind::kFetch: fetch(s, m); break;
      }
      metrics_.stages.push_back(std::move(m));
    }
    ExecResult out;
    out.result.header = plan_.logical.output_names;
    out.metrics = std::move(metrics_);
    if (plan_.describe) {
      out.result.rows = std::move(described_);
      return out;
    }
    for (const auto& split : rows_.at(plan_.stages.back().id)) {
      for (const auto& r : split) {
        ResultRow row;
        for (std::size_t i = 0; i < r.values.size(); ++i) {
          if (!plan_.item_hidden[i]) row.cells.push_back(rdf::render(r.values[i]));
        }
        for (const auto& [i, desc] : plan_.sort_keys) row.sort_keys.push_back(r.values[i]);
        out.result.rows.push_back(std::move(row));
      }
    }
    return out;
  }

 private:
  std::string stage_name(const Stage& s) const {
    const auto& views = plan_.logical.views;
    switch (s.kind) {
      case StageKind::kScan: return "scan " + views.at(s.view).name;
      case StageKind::kJoin: {
        std::string n = s.join == plan::JoinKind::kInner ? "join" : "left outer join";
        if (s.on.empty()) return n + " (cross)";
        return n + " on " + views.at(s.on.front().right_column->view).name;
      }
      default: return std::string(stage_kind_name(s.kind));
    }
  }

  std::size_t view_count() const { return plan_.logical.views.size(); }

  std::string compact(const std::string& full) const { return table_.prefixes().compress(full); }

  Value expand_value(Value v) const {
    if (v.kind == rdf::ValueKind::kUri) v.lexical = table_.prefixes().expand(v.lexical);
    return v;
  }

  // Builds the view row: required columns present, folds resolved, listed
  // columns split into one row per value combination.
  void view_rows(const Stage& s, storage::Row&& row, std::vector<Tuple>& out) const {
    const plan::ViewDef& view = plan_.logical.views.at(s.view);
    auto slot = std::make_shared<Slot>();
    slot->key = table_.prefixes().expand(row.key);
    for (const auto& c : view.columns) {
      auto& vals = slot->cols[c.name];
      auto it = row.cells.find(c.storage);
      if (it != row.cells.end()) {
        for (const auto& v : it->second) vals.push_back(expand_value(v));
      }
      if (c.fold < 0 && vals.empty()) return;
    }
    std::map<int, bool> matched;
    const auto& folds = plan_.logical.folds;
    for (std::size_t g = 0; g < folds.size(); ++g) {
      if (folds[g].view != s.view) continue;
      bool ok = folds[g].parent < 0 || matched.at(folds[g].parent);
      for (const auto& c : folds[g].columns) ok = ok && !slot->cols[c].empty();
      matched[static_cast<int>(g)] = ok;
      if (!ok) {
        for (const auto& c : folds[g].columns) slot->cols[c].clear();
      }
    }
    std::vector<std::string> split;
    for (const auto& c : s.expand) {
      if (slot->cols[c].size() > 1) split.push_back(c);
    }
    std::vector<SlotPtr> slots{slot};
    for (const auto& c : split) {
      std::vector<SlotPtr> next;
      for (const auto& base : slots) {
        for (const auto& v : base->cols.at(c)) {
          auto copy = std::make_shared<Slot>(*base);
          copy->cols[c] = {v};
          next.push_back(copy);
        }
      }
      slots = std::move(next);
    }
    for (auto& sp : slots) {
      Tuple t;
      t.slots.resize(view_count());
      t.slots[static_cast<std::size_t>(s.view)] = sp;
      bool keep = true;
      for (const auto& c : s.sigmas) keep = keep && holds(t, c);
      if (keep) out.push_back(std::move(t));
    }
  }

  // Residual WHERE, final list expansion and projection.
  void finish(const Stage& s, const Tuple& t, std::vector<OutRow>& out) const {
    for (const auto& c : s.residual) {
      if (!holds(t, c)) return;
    }
    struct Multi {
      int view;
      std::string column;
      const std::vector<Value>* values;
    };
    std::vector<Multi> multi;
    for (int v : s.branch_views) {
      const SlotPtr& slot = t.slots.at(static_cast<std::size_t>(v));
      if (!slot) continue;
      for (const auto& [c, vals] : slot->cols) {
        if (vals.size() > 1) multi.push_back({v, c, &vals});
      }
    }
    std::vector<std::size_t> pos(multi.size(), 0);
    while (true) {
      OutRow r;
      for (const auto& item : s.items) {
        if (!item) {
          r.values.push_back(std::nullopt);
          continue;
        }
        bool done = false;
        for (std::size_t m = 0; m < multi.size(); ++m) {
          if (multi[m].view == item->view && multi[m].column == item->column) {
            r.values.push_back((*multi[m].values)[pos[m]]);
            done = true;
          }
        }
        if (!done) r.values.push_back(get(t, *item));
      }
      out.push_back(std::move(r));
      std::size_t m = 0;
      while (m < multi.size() && ++pos[m] == multi[m].values->size()) pos[m++] = 0;
      if (m == multi.size()) break;
    }
  }

  void scan(const Stage& s, StageMetrics& m) {
    const plan::ViewDef& view = plan_.logical.views.at(s.view);
    std::set<std::string> cols;
    for (const auto& c : view.columns) cols.insert(c.storage);
    std::optional<std::string> row_filter;
    if (s.row_key) row_filter = compact(*s.row_key);
    Splits<std::size_t> regions;
    for (std::size_t r = 0; r < table_.region_count(); ++r) regions.push_back({r});
    std::vector<storage::ReadMetrics> reads(regions.size());
    std::vector<std::uint64_t> rows_in(regions.size(), 0);

    if (s.finalize) {
      auto out = mr::run_map_only<std::size_t, OutRow>(
          m.name, regions, opt_.parallelism, [&](const std::size_t& r, std::vector<OutRow>& o) {
            table_.scan_region(
                r, cols, row_filter,
                [&](storage::Row&& row) {
                  ++rows_in[r];
                  std::vector<Tuple> ts;
                  view_rows(s, std::move(row), ts);
                  for (const auto& t : ts) finish(s, t, o);
                },
                &reads[r]);
          });
      count_out(out, m);
      rows_[s.id] = std::move(out);
    } else {
      auto out = mr::run_map_only<std::size_t, Tuple>(
          m.name, regions, opt_.parallelism, [&](const std::size_t& r, std::vector<Tuple>& o) {
            table_.scan_region(
                r, cols, row_filter,
                [&](storage::Row&& row) {
                  ++rows_in[r];
                  view_rows(s, std::move(row), o);
                },
                &reads[r]);
          });
      count_out(out, m);
      tuples_[s.id] = std::move(out);
    }
    for (std::size_t r = 0; r < regions.size(); ++r) {
      m.records_in += rows_in[r];
      m.blocks_read += reads[r].blocks_read;
      m.blocks_skipped += reads[r].blocks_skipped;
      m.cells_read += reads[r].cells_read;
    }
  }

  template <class T>
  static void count_out(const Splits<T>& out, StageMetrics& m) {
    for (const auto& sp : out) m.records_out += sp.size();
  }

  void join(const Stage& s, StageMetrics& m) {
    for (const auto& c : s.on) {
      if (c.kind != CondKind::kColumnEq) throw PlanningError("join condition must be an equality");
    }
    Splits<Tagged> input;
    for (int side = 0; side < 2; ++side) {
      for (const auto& sp : tuples_.at(s.inputs[static_cast<std::size_t>(side)])) {
        std::vector<Tagged> tagged;
        tagged.reserve(sp.size());
        for (const auto& t : sp) tagged.push_back({side, t});
        input.push_back(std::move(tagged));
      }
    }
    const bool outer = s.join == plan::JoinKind::kLeftOuter;
    mr::MrJob<Tagged, Tagged, Tuple> job;
    job.name = m.name;
    job.reducers = opt_.reducers;
    job.map = [&](const Tagged& in, mr::MapContext<Tagged>& ctx) {
      std::string key;
      for (const auto& c : s.on) {
        Cell v = get(in.tuple, in.side == 0 ? c.left : *c.right_column);
        if (!v) {
          if (in.side == 0 && outer) ctx.emit("", in);
          return;
        }
        key += rdf::join_key(*v);
        key += '\x1f';
      }
      ctx.emit(std::move(key), in);
    };
    job.reduce = [&](const std::string&, std::vector<Tagged>& values,
                     mr::ReduceContext<Tuple>& ctx) {
      std::vector<const Tuple*> left, right;
      for (const auto& v : values) (v.side == 0 ? left : right).push_back(&v.tuple);
      for (const Tuple* l : left) {
        if (right.empty() && outer) ctx.emit(*l);
        for (const Tuple* r : right) {
          Tuple t = *l;
          for (std::size_t i = 0; i < t.slots.size(); ++i) {
            if (!t.slots[i]) t.slots[i] = r->slots[i];
          }
          ctx.emit(std::move(t));
        }
      }
    };
    job.value_bytes = [](const Tagged& t) { return tuple_bytes(t.tuple); };
    auto result = mr::run_job(job, input, opt_.parallelism);
    m.records_in = result.metrics.map_input_records;
    m.shuffled_records = result.metrics.shuffled_records;
    m.shuffled_bytes = result.metrics.shuffled_bytes;
    m.records_out = result.metrics.output_records;
    tuples_[s.id] = std::move(result.partitions);
  }

  void finalize_stage(const Stage& s, StageMetrics& m) {
    const auto& in = tuples_.at(s.inputs.front());
    for (const auto& sp : in) m.records_in += sp.size();
    auto out = mr::run_map_only<Tuple, OutRow>(
        m.name, in, opt_.parallelism,
        [&](const Tuple& t, std::vector<OutRow>& o) { finish(s, t, o); });
    count_out(out, m);
    rows_[s.id] = std::move(out);
  }

  void union_stage(const Stage& s, StageMetrics& m) {
    Splits<OutRow> all;
    for (int id : s.inputs) {
      for (const auto& sp : rows_.at(id)) all.push_back(sp);
    }
    count_out(all, m);
    m.records_in = m.records_out;
    rows_[s.id] = std::move(all);
  }

  std::string row_key(const OutRow& r) const {
    std::string k;
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      if (plan_.item_hidden[i]) continue;
      k += rdf::render(r.values[i]);
      k += '\t';
    }
    return k;
  }

  void dedup(const Stage& s, StageMetrics& m) {
    mr::MrJob<OutRow, OutRow, OutRow> job;
    job.name = m.name;
    job.reducers = opt_.reducers;
    job.map = [&](const OutRow& r, mr::MapContext<OutRow>& ctx) { ctx.emit(row_key(r), r); };
    job.reduce = [&](const std::string&, std::vector<OutRow>& values,
                     mr::ReduceContext<OutRow>& ctx) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < values.size(); ++i) {
        if (sort_compare(values[i], values[best], plan_.sort_keys) < 0) best = i;
      }
      ctx.emit(std::move(values[best]));
    };
    job.value_bytes = [](const OutRow& r) {
      std::size_t n = 0;
      for (const auto& v : r.values) n += v ? v->lexical.size() : 0;
      return n;
    };
    auto result = mr::run_job(job, rows_.at(s.inputs.front()), opt_.parallelism);
    m.records_in = result.metrics.map_input_records;
    m.shuffled_records = result.metrics.shuffled_records;
    m.shuffled_bytes = result.metrics.shuffled_bytes;
    m.records_out = result.metrics.output_records;
    rows_[s.id] = std::move(result.partitions);
  }

  void sort(const Stage& s, StageMetrics& m) {
    std::vector<OutRow> all;
    for (const auto& sp : rows_.at(s.inputs.front())) all.insert(all.end(), sp.begin(), sp.end());
    constexpr int kWidth = 12;
    auto encode = [](std::size_t i) {
      std::string k = std::to_string(i);
      return std::string(static_cast<std::size_t>(kWidth) - k.size(), '0') + k;
    };
    Splits<std::size_t> input(1);
    for (std::size_t i = 0; i < all.size(); ++i) input[0].push_back(i);
    mr::MrJob<std::size_t, std::size_t> job;
    job.name = m.name;
    job.reducers = 1;
    job.map = [&](const std::size_t& i, mr::MapContext<std::size_t>& ctx) { ctx.emit(encode(i), i); };
    job.key_less = [&](const std::string& a, const std::string& b) {
      std::size_t i = std::stoull(a), j = std::stoull(b);
      int c = sort_compare(all[i], all[j], plan_.sort_keys);
      return c != 0 ? c < 0 : i < j;
    };
    job.value_bytes = [](const std::size_t&) { return sizeof(std::size_t); };
    auto result = mr::run_job(job, input, opt_.parallelism);
    std::vector<OutRow> sorted;
    for (const auto& [k, i] : result.partitions.front()) {
      if (s.limit && sorted.size() >= *s.limit) break;
      sorted.push_back(all[i]);
    }
    m.records_in = all.size();
    m.shuffled_records = result.metrics.shuffled_records;
    m.shuffled_bytes = result.metrics.shuffled_bytes;
    m.records_out = sorted.size();
    rows_[s.id] = Splits<OutRow>{std::move(sorted)};
  }

  void fetch(const Stage& s, StageMetrics& m) {
    std::set<std::string> cols(plan_.logical.describe_columns.begin(),
                               plan_.logical.describe_columns.end());
    const auto& in = rows_.at(s.inputs.front());
    std::vector<storage::ReadMetrics> reads(in.size());
    auto out = mr::run_map_only<OutRow, ResultRow>(
        m.name, in, opt_.parallelism, [&](const OutRow& r, std::vector<ResultRow>& o) {
          const Cell& target = r.values.front();
          if (!target || target->kind != rdf::ValueKind::kUri) return;
          storage::ReadMetrics rm;
          auto cells = table_.get_row(compact(target->lexical), cols, &rm);
          std::lock_guard<std::mutex> lock(mu_);
          reads.front().add(rm);
          if (cells.empty()) return;
          ResultRow row;
          row.cells.push_back(rdf::render(*target));
          for (const auto& c : plan_.logical.describe_columns) {
            std::vector<Value> vals;
            if (auto it = cells.find(c); it != cells.end()) {
              for (const auto& v : it->second) vals.push_back(expand_value(v));
            }
            row.cells.push_back(render_list(vals));
          }
          o.push_back(std::move(row));
        });
    for (const auto& sp : in) m.records_in += sp.size();
    for (auto& sp : out) {
      for (auto& r : sp) described_.push_back(std::move(r));
    }
    m.records_out = described_.size();
    m.blocks_read = reads.front().blocks_read;
    m.blocks_skipped = reads.front().blocks_skipped;
    m.cells_read = reads.front().cells_read;
  }

  const storage::PropertyTable& table_;
  const PhysicalPlan& plan_;
  ExecOptions opt_;
  ExecMetrics metrics_;
  std::map<int, Splits<Tuple>> tuples_;
  std::map<int, Splits<OutRow>> rows_;
  std::vector<ResultRow> described_;
  std::mutex mu_;
};

}  // namespace

ExecResult execute(const storage::PropertyTable& table, const PhysicalPlan& plan,
                   const ExecOptions& options) {
  return Runner(table, plan, options).run();
}

}  // namespace rdfpt::exec
