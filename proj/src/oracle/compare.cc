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

#include "rdfpt/oracle/compare.h"

#include <map>

namespace rdfpt::oracle {

namespace {

using exec::ResultRow;
using Bag = std::map<std::string, long>;

std::string text(const ResultRow& r) {
  std::string s;
  for (const auto& c : r.cells) s += c + '\t';
  return s;
}

Bag bag(const std::vector<ResultRow>& rows, std::size_t from, std::size_t to) {
  Bag b;
  for (std::size_t i = from; i < to; ++i) ++b[text(rows[i])];
  return b;
}

bool within(const Bag& part, const Bag& whole) {
  for (const auto& [k, n] : part) {
    auto it = whole.find(k);
    if (it == whole.end() || it->second < n) return false;
  }
  return true;
}

bool same_keys(const ResultRow& a, const ResultRow& b) {
  if (a.sort_keys.size() != b.sort_keys.size()) return false;
  for (std::size_t i = 0; i < a.sort_keys.size(); ++i) {
    const auto& x = a.sort_keys[i];
    const auto& y = b.sort_keys[i];
    if (rdf::compare_for_order(x ? &*x : nullptr, y ? &*y : nullptr) != 0) return false;
  }
  return true;
}

Comparison fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

Comparison compare_results(const exec::ResultSet& actual, const exec::ResultSet& expected,
                           const sparql::SparqlQuery& query,
                           const exec::ResultSet* expected_unlimited) {
  if (actual.header != expected.header) return fail("headers differ");
  const auto& a = actual.rows;
  const auto& e = expected.rows;
  if (a.size() != e.size()) {
    return fail("row counts differ: " + std::to_string(a.size()) + " vs " +
                std::to_string(e.size()));
  }
  const bool ordered = !query.order_by.empty();
  const bool limited = query.limit && expected_unlimited != nullptr
                           ? expected_unlimited->rows.size() > *query.limit
                           : query.limit.has_value();
  Bag pool;
  if (expected_unlimited) pool = bag(expected_unlimited->rows, 0, expected_unlimited->rows.size());

  if (ordered) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!same_keys(a[i], e[i])) return fail("sort keys differ at row " + std::to_string(i));
    }
    // Compare tie groups; only the last one may be cut by LIMIT.
    std::size_t i = 0;
    while (i < a.size()) {
      std::size_t j = i + 1;
      while (j < a.size() && same_keys(a[i], a[j])) ++j;
      Bag ba = bag(a, i, j), be = bag(e, i, j);
      if (j == a.size() && limited) {
        if (expected_unlimited && !within(ba, pool)) {
          return fail("rows in the last tie group are not in the reference result");
        }
      } else if (ba != be) {
        return fail("rows differ in the tie group starting at row " + std::to_string(i));
      }
      i = j;
    }
    return {};
  }
  Bag ba = bag(a, 0, a.size());
  if (limited) {
    if (expected_unlimited && !within(ba, pool)) {
      return fail("rows are not drawn from the reference result");
    }
    return {};
  }
  if (ba != bag(e, 0, e.size())) return fail("row multisets differ");
  return {};
}

}  // namespace rdfpt::oracle
