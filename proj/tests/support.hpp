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


// Seeded generators and small independent reference implementations shared
// by the test suites.

#ifndef MONOSUB_TESTS_SUPPORT_HPP_
#define MONOSUB_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "monosub/coloring.hpp"
#include "monosub/matrix.hpp"
#include "monosub/rng.hpp"
#include "monosub/rooted_tree.hpp"
#include "monosub/sequence.hpp"

namespace monosub::testing {

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                            std::int64_t lo, std::int64_t hi) {
  std::vector<Value> entries(rows * cols);
  for (auto& e : entries) e = rng.between(lo, hi);
  return Matrix(rows, cols, std::move(entries));
}

// Every coordinate is an independent random permutation of 1..count.
inline IndexedSequence random_sequence(Rng& rng, std::size_t dim,
                                       std::size_t count) {
  std::vector<std::int64_t> coords(dim * count);
  std::vector<std::int64_t> perm(count);
  for (std::size_t a = 0; a < dim; ++a) {
    std::iota(perm.begin(), perm.end(), std::int64_t{1});
    rng.shuffle(std::span<std::int64_t>(perm));
    for (std::size_t k = 0; k < count; ++k) coords[k * dim + a] = perm[k];
  }
  IndexList tags(count);
  std::iota(tags.begin(), tags.end(), std::size_t{0});
  return IndexedSequence(dim, std::move(coords), std::move(tags));
}

inline SignVector random_signs(Rng& rng, std::size_t dim) {
  std::vector<Sign> signs(dim);
  for (auto& s : signs) s = rng.bit() ? Sign::kPlus : Sign::kMinus;
  return SignVector(std::move(signs));
}

inline LabeledBinaryTree random_labels(Rng& rng, std::size_t height,
                                       std::size_t dim) {
  LabeledBinaryTree tree(height, dim);
  for (std::size_t k = 0; k < height; ++k) {
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << k); ++p) {
      tree.set_label(Vertex{k, p}, random_signs(rng, dim));
    }
  }
  return tree;
}

inline ColoredMatrix random_coloring(Rng& rng, std::size_t rows,
                                     std::size_t cols) {
  ColoredMatrix cm(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      cm.set(r, c, rng.bit() ? Color::kRed : Color::kBlue);
    }
  }
  return cm;
}

// Ancestors of a leaf by walking parent links explicitly, root first.
inline std::vector<Vertex> path_to_root(std::size_t m, Leaf leaf) {
  std::vector<Vertex> path;
  Vertex v{m, leaf};
  path.push_back(v);
  while (v.depth > 0) {
    v = Vertex{v.depth - 1, v.position / 2};
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Deepest shared vertex of the two root paths.
inline Vertex walked_ancestor(std::size_t m, Leaf a, Leaf b) {
  const auto pa = path_to_root(m, a);
  const auto pb = path_to_root(m, b);
  Vertex out = pa.front();
  for (std::size_t i = 0; i < pa.size() && pa[i] == pb[i]; ++i) out = pa[i];
  return out;
}

// Vertex set of T[X] by enumerating all pairs.
inline std::set<Vertex> pairwise_ancestors(std::size_t m, const LeafSet& x) {
  std::set<Vertex> out;
  for (Leaf a : x) {
    for (Leaf b : x) out.insert(walked_ancestor(m, a, b));
  }
  return out;
}

// Whether `values` has a weakly monotone subsequence of length n, by
// checking every n-subset.
template <typename T>
bool has_monotone_by_subsets(const std::vector<T>& values, std::size_t n) {
  const std::size_t len = values.size();
  if (n > len) return false;
  if (n == 0) return true;
  std::vector<bool> pick(len, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<T> chosen;
    for (std::size_t i = 0; i < len; ++i) {
      if (pick[i]) chosen.push_back(values[i]);
    }
    if (std::is_sorted(chosen.begin(), chosen.end()) ||
        std::is_sorted(chosen.rbegin(), chosen.rend())) {
      return true;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// Independent n x n (row-)monotone existence check: all row subsets, all
// column subsets, predicate evaluated with the library's matrix predicates.
inline bool exists_submatrix(const Matrix& m, std::size_t n, bool full) {
  if (n > m.rows() || n > m.cols()) return false;
  std::vector<bool> rpick(m.rows(), false);
  std::fill(rpick.begin(), rpick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    IndexList rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (rpick[i]) rows.push_back(i);
    }
    std::vector<bool> cpick(m.cols(), false);
    std::fill(cpick.begin(), cpick.begin() + static_cast<std::ptrdiff_t>(n), true);
    do {
      IndexList cols;
      for (std::size_t i = 0; i < m.cols(); ++i) {
        if (cpick[i]) cols.push_back(i);
      }
      const Matrix sub = submatrix(m, rows, cols);
      if (full ? is_monotone(sub).has_value() : is_row_monotone(sub).has_value()) {
        return true;
      }
    } while (std::prev_permutation(cpick.begin(), cpick.end()));
  } while (std::prev_permutation(rpick.begin(), rpick.end()));
  return false;
}

}  // namespace monosub::testing

#endif  // MONOSUB_TESTS_SUPPORT_HPP_
