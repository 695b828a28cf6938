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


#include "monosub/erdos_szekeres.hpp"

#include <algorithm>
#include <numeric>

namespace monosub {
namespace {

// Ties keep index order in both directions, so equal values always count
// as monotone.
template <typename T>
std::vector<std::int64_t> ranks_of(std::span<const T> values,
                                   bool descending = false) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return descending ? values[b] < values[a]
                                       : values[a] < values[b];
                   });
  std::vector<std::int64_t> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranks[order[r]] = static_cast<std::int64_t>(r);
  }
  return ranks;
}

// Prefix-maximum Fenwick tree over ranks 0..size-1.
class MaxFenwick {
 public:
  explicit MaxFenwick(std::size_t size) : tree_(size + 1, 0) {}

  void raise(std::size_t index, std::size_t value) {
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) {
      tree_[i] = std::max(tree_[i], value);
    }
  }
  // Maximum over indices 0..index-1.
  std::size_t prefix_max(std::size_t index) const {
    std::size_t best = 0;
    for (std::size_t i = index; i > 0; i -= i & (~i + 1)) {
      best = std::max(best, tree_[i]);
    }
    return best;
  }

 private:
  std::vector<std::size_t> tree_;
};

// For each i, the length of the longest increasing run starting at i.
// `ranks` is a permutation of 0..N-1.
std::vector<std::size_t> runs_from(std::span<const std::int64_t> ranks) {
  const std::size_t n = ranks.size();
  MaxFenwick fenwick(n);
  std::vector<std::size_t> run(n);
  for (std::size_t i = n; i-- > 0;) {
    // Larger ranks are stored reversed so a prefix query covers them.
    const auto reversed = n - 1 - static_cast<std::size_t>(ranks[i]);
    run[i] = 1 + fenwick.prefix_max(reversed);
    fenwick.raise(reversed, run[i]);
  }
  return run;
}

std::optional<IndexList> smallest_increasing(
    std::span<const std::int64_t> ranks, std::size_t n) {
  const std::vector<std::size_t> run = runs_from(ranks);
  IndexList out;
  std::int64_t last = -1;
  for (std::size_t i = 0; i < ranks.size() && out.size() < n; ++i) {
    if (ranks[i] > last && run[i] >= n - out.size()) {
      out.push_back(i);
      last = ranks[i];
    }
  }
  if (out.size() < n) return std::nullopt;
  return out;
}

template <typename T>
std::optional<MonotoneRun> search(std::span<const T> seq, std::size_t n) {
  if (n == 0) return MonotoneRun{};
  if (auto up = smallest_increasing(ranks_of(seq), n)) {
    return MonotoneRun{std::move(*up), Direction::kIncreasing};
  }
  if (auto down = smallest_increasing(ranks_of(seq, true), n)) {
    return MonotoneRun{std::move(*down), Direction::kDecreasing};
  }
  return std::nullopt;
}

}  // namespace

std::optional<MonotoneRun> monotone_subsequence_1d(std::span<const Value> seq,
                                                   std::size_t n) {
  return search(seq, n);
}

std::optional<MonotoneRun> monotone_subsequence_1d(
    std::span<const std::int64_t> seq, std::size_t n) {
  return search(seq, n);
}

std::size_t longest_increasing_length(std::span<const std::int64_t> ranks) {
  const std::vector<std::int64_t> dense = ranks_of(ranks);
  const std::vector<std::size_t> run = runs_from(dense);
  return run.empty() ? 0 : *std::max_element(run.begin(), run.end());
}

}  // namespace monosub
