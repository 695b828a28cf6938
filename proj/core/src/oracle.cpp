// Copyright 2026 The monosub Authors
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


#include "monosub/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace monosub {
namespace {

// Equal values share a rank, so weak comparisons survive.
std::vector<std::int64_t> dense_ranks(const std::vector<Value>& values) {
  std::vector<Value> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::int64_t> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = std::lower_bound(sorted.begin(), sorted.end(), values[i]) -
             sorted.begin();
  }
  return out;
}

class Search {
 public:
  Search(const SearchBudget& budget, std::size_t universe)
      : budget_(budget), universe_(universe) {}

  bool lexicographic() const { return budget_.lexicographic; }

  // Order key of a sorted index set under the configured enumeration.
  IndexList key(const IndexList& set) const {
    if (budget_.lexicographic) return set;
    IndexList mirrored(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
      mirrored[i] = universe_ - 1 - set[set.size() - 1 - i];
    }
    return mirrored;
  }

  bool charge_rows() {
    if (++row_subsets_ > budget_.max_row_subsets) truncated_ = true;
    return !truncated_;
  }
  bool charge_cols() {
    if (++col_subsets_ > budget_.max_col_subsets) truncated_ = true;
    return !truncated_;
  }
  bool truncated() const { return truncated_; }

  void throw_if_truncated() const {
    if (truncated_) {
      throw BudgetExceeded("search budget exhausted after " +
                           std::to_string(row_subsets_) + " row and " +
                           std::to_string(col_subsets_) +
                           " column subsets without a find");
    }
  }

 private:
  SearchBudget budget_;
  std::size_t universe_;
  std::uint64_t row_subsets_ = 0;
  std::uint64_t col_subsets_ = 0;
  bool truncated_ = false;
};

// k-subsets of {0..n-1} in lexicographic order, or in the mirrored order
// (index i read as n-1-i) when `lexicographic` is false. Stops when `visit`
// returns true; returns whether it stopped.
bool for_each_subset(std::size_t n, std::size_t k, bool lexicographic,
                     const std::function<bool(const IndexList&)>& visit) {
  if (k > n) return false;
  IndexList pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  IndexList subset(k);
  while (true) {
    if (lexicographic) {
      subset = pick;
    } else {
      for (std::size_t i = 0; i < k; ++i) subset[i] = n - 1 - pick[k - 1 - i];
    }
    if (visit(subset)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// First chain of n candidate columns (in enumeration order) where
// `ordered(x, y)` holds for consecutive columns x < y.
std::optional<IndexList> first_chain(
    Search& search, const IndexList& candidates, std::size_t n,
    const std::function<bool(std::size_t, std::size_t)>& ordered) {
  IndexList walk = candidates;
  if (!search.lexicographic()) std::reverse(walk.begin(), walk.end());
  IndexList chain;
  std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
    if (chain.size() == n) return true;
    for (std::size_t i = from; i + (n - chain.size()) <= walk.size(); ++i) {
      const std::size_t c = walk[i];
      if (!chain.empty()) {
        const std::size_t prev = chain.back();
        const bool ok = search.lexicographic() ? ordered(prev, c)
                                               : ordered(c, prev);
        if (!ok) continue;
      }
      if (!search.charge_cols()) return false;
      chain.push_back(c);
      if (extend(i + 1)) return true;
      chain.pop_back();
      if (search.truncated()) return false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::sort(chain.begin(), chain.end());
  return chain;
}

struct RankTables {
  // row_rank[a][c] ranks entries within row a; col_rank[a][c] within
  // column c.
  std::vector<std::vector<std::int64_t>> row_rank;
  std::vector<std::vector<std::int64_t>> col_rank;
};

RankTables rank_tables(const Matrix& m) {
  RankTables t;
  for (std::size_t a = 0; a < m.rows(); ++a) {
    const auto row = m.row(a);
    t.row_rank.push_back(dense_ranks(std::vector<Value>(row.begin(), row.end())));
  }
  t.col_rank.assign(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto ranks = dense_ranks(m.column(c));
    for (std::size_t a = 0; a < m.rows(); ++a) t.col_rank[a][c] = ranks[a];
  }
  return t;
}

std::optional<SubmatrixWitness> search_matrix(const Matrix& m, std::size_t n,
                                              const SearchBudget& budget,
                                              bool full) {
  if (n == 0) throw InvalidArgument("brute-force search needs n >= 1");
  const RankTables t = rank_tables(m);
  Search search(budget, m.cols());
  std::optional<SubmatrixWitness> found;

  for_each_subset(m.rows(), n, budget.lexicographic, [&](const IndexList& rows) {
    if (!search.charge_rows()) return true;
    std::optional<IndexList> best;
    auto consider = [&](std::optional<IndexList> cols) {
      if (cols && (!best || search.key(*cols) < search.key(*best))) best = cols;
    };
    for (Direction rd : {Direction::kIncreasing, Direction::kDecreasing}) {
      auto ordered = [&](std::size_t x, std::size_t y) {
        for (std::size_t a : rows) {
          const auto lo = t.row_rank[a][x];
          const auto hi = t.row_rank[a][y];
          if (rd == Direction::kIncreasing ? lo > hi : lo < hi) return false;
        }
        return true;
      };
      if (!full) {
        IndexList all(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) all[c] = c;
        consider(first_chain(search, all, n, ordered));
        continue;
      }
      for (Direction cd : {Direction::kIncreasing, Direction::kDecreasing}) {
        IndexList candidates;
        for (std::size_t c = 0; c < m.cols(); ++c) {
          bool ok = true;
          for (std::size_t k = 1; k < rows.size() && ok; ++k) {
            const auto lo = t.col_rank[rows[k - 1]][c];
            const auto hi = t.col_rank[rows[k]][c];
            ok = cd == Direction::kIncreasing ? lo <= hi : lo >= hi;
          }
          if (ok) candidates.push_back(c);
        }
        consider(first_chain(search, candidates, n, ordered));
      }
    }
    if (search.truncated()) return true;
    if (!best) return false;

    const Matrix sub = submatrix(m, rows, *best);
    SubmatrixWitness w{rows, *best, Direction::kIncreasing, std::nullopt};
    if (full) {
      const auto dirs = is_monotone(sub);
      w.row_direction = dirs->rows;
      w.column_direction = dirs->columns;
    } else {
      w.row_direction = *is_row_monotone(sub);
    }
    found = std::move(w);
    return true;
  });
  if (!found) search.throw_if_truncated();
  return found;
}

}  // namespace

std::optional<SubmatrixWitness> brute_force_row_monotone(
    const Matrix& m, std::size_t n, const SearchBudget& budget) {
  return search_matrix(m, n, budget, false);
}

std::optional<SubmatrixWitness> brute_force_monotone(
    const Matrix& m, std::size_t n, const SearchBudget& budget) {
  return search_matrix(m, n, budget, true);
}

std::optional<MonochromaticSubmatrix> brute_force_monochromatic(
    const ColoredMatrix& cm, std::size_t n, std::size_t s,
    const SearchBudget& budget) {
  if (n == 0 || s == 0) {
    throw InvalidArgument("monochromatic search needs n >= 1 and s >= 1");
  }
  if (n > cm.rows() || s > cm.cols()) return std::nullopt;
  Search search(budget, cm.cols());
  std::optional<MonochromaticSubmatrix> found;
  for_each_subset(cm.cols(), s, budget.lexicographic, [&](const IndexList& cols) {
    if (!search.charge_cols()) return true;
    for (Color color : {Color::kRed, Color::kBlue}) {
      IndexList rows;
      for (std::size_t r = 0; r < cm.rows() && rows.size() < n; ++r) {
        const bool constant = std::all_of(
            cols.begin(), cols.end(),
            [&](std::size_t c) { return cm.at(r, c) == color; });
        if (constant) rows.push_back(r);
      }
      if (rows.size() == n) {
        found = MonochromaticSubmatrix{std::move(rows), cols, color};
        return true;
      }
    }
    return false;
  });
  if (!found) search.throw_if_truncated();
  return found;
}

std::vector<std::int64_t> es_extremal_sequence(std::size_t n) {
  if (n == 0) throw InvalidArgument("extremal sequence needs n >= 1");
  const auto block = static_cast<std::int64_t>(n - 1);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(block * block));
  for (std::int64_t b = 0; b < block; ++b) {
    for (std::int64_t v = block; v >= 1; --v) out.push_back(b * block + v);
  }
  return out;
}

}  // namespace monosub
