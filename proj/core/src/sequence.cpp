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

#include "monosub/sequence.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace monosub {

IndexedSequence::IndexedSequence(std::size_t dim,
                                 std::vector<std::int64_t> coords,
                                 IndexList tags)
    : dim_(dim), coords_(std::move(coords)), tags_(std::move(tags)) {
  if (coords_.size() != dim_ * tags_.size()) {
    throw InvalidArgument("sequence coordinates do not match its length");
  }
  for (std::size_t k = 1; k < tags_.size(); ++k) {
    if (tags_[k] <= tags_[k - 1]) {
      throw InvalidArgument("sequence tags must be strictly increasing");
    }
  }
}

IndexedSequence IndexedSequence::from_vectors(
    const std::vector<std::vector<std::int64_t>>& vectors) {
  const std::size_t dim = vectors.empty() ? 0 : vectors.front().size();
  std::vector<std::int64_t> coords;
  IndexList tags;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != dim) {
      throw InvalidArgument("sequence vectors of different dimension");
    }
    coords.insert(coords.end(), vectors[k].begin(), vectors[k].end());
    tags.push_back(k);
  }
  return IndexedSequence(dim, std::move(coords), std::move(tags));
}

IndexedSequence IndexedSequence::from_columns(const Matrix& m) {
  const std::vector<std::int64_t> ranks = tie_break_row_ranks(m);
  std::vector<std::int64_t> coords(m.rows() * m.cols());
  IndexList tags(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    tags[c] = c;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      coords[c * m.rows() + r] = ranks[r * m.cols() + c];
    }
  }
  return IndexedSequence(m.rows(), std::move(coords), std::move(tags));
}

IndexedSequence IndexedSequence::select(
    std::span<const std::size_t> positions) const {
  std::vector<std::int64_t> coords;
  coords.reserve(positions.size() * dim_);
  IndexList tags;
  tags.reserve(positions.size());
  for (std::size_t p : positions) {
    if (p >= size()) throw IndexOutOfBounds("sequence position out of bounds");
    const auto v = vector(p);
    coords.insert(coords.end(), v.begin(), v.end());
    tags.push_back(tags_[p]);
  }
  return IndexedSequence(dim_, std::move(coords), std::move(tags));
}

void IndexedSequence::check_distinct() const {
  std::vector<std::int64_t> column(size());
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t k = 0; k < size(); ++k) column[k] = coord(k, a);
    std::sort(column.begin(), column.end());
    if (std::adjacent_find(column.begin(), column.end()) != column.end()) {
      throw TiedCoordinate(a);
    }
  }
}

namespace {

struct PositionSplit {
  SignVector sign;
  IndexList first;
  IndexList second;
};

// bipartite_split over positions of `seq`; `group` is increasing. `in_low`
// is all-zero scratch of length seq.size() and is left all-zero.
PositionSplit split_positions(const IndexedSequence& seq,
                              std::span<const std::size_t> group,
                              std::vector<char>& in_low) {
  if (group.size() < 2) throw TooShort("bipartite split needs two elements");
  const std::size_t half = group.size() / 2;
  IndexList a(group.begin(), group.begin() + half);
  IndexList b(group.begin() + half, group.begin() + 2 * half);
  std::vector<Sign> sign(seq.dim(), Sign::kPlus);

  IndexList merged;
  for (std::size_t coord = 0; coord < seq.dim(); ++coord) {
    merged.assign(a.begin(), a.end());
    merged.insert(merged.end(), b.begin(), b.end());
    std::sort(merged.begin(), merged.end(),
              [&](std::size_t x, std::size_t y) {
                return seq.coord(x, coord) < seq.coord(y, coord);
              });
    for (std::size_t k = 1; k < merged.size(); ++k) {
      if (seq.coord(merged[k - 1], coord) == seq.coord(merged[k], coord)) {
        throw TiedCoordinate(coord);
      }
    }
    // Positions in the lower half of this coordinate.
    for (std::size_t k = 0; k < a.size(); ++k) in_low[merged[k]] = 1;

    const auto a_low = static_cast<std::size_t>(
        std::count_if(a.begin(), a.end(), [&](std::size_t p) { return in_low[p]; }));
    const bool plus = 2 * a_low >= a.size();
    auto keep = [&](IndexList& part, bool low) {
      std::erase_if(part, [&](std::size_t p) {
        return static_cast<bool>(in_low[p]) != low;
      });
    };
    // Both parts end with |A ∩ low| (resp. |A ∩ high|) elements because the
    // lower half has exactly |A| members.
    keep(a, plus);
    keep(b, !plus);
    for (std::size_t k = 0; k < merged.size() / 2; ++k) in_low[merged[k]] = 0;
    sign[coord] = plus ? Sign::kPlus : Sign::kMinus;
  }
  return PositionSplit{SignVector(std::move(sign)), std::move(a), std::move(b)};
}

struct Growth {
  std::size_t height = 0;
  LabeledBinaryTree tree;
  std::vector<IndexList> groups;
};

// Runs splitting rounds until `max_height` or until some group has fewer
// than two members. The last completed round is returned.
Growth grow(const IndexedSequence& seq, std::size_t max_height) {
  if (seq.empty()) throw InsufficientLength("empty sequence");
  IndexList all(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) all[k] = k;

  std::vector<IndexList> groups{std::move(all)};
  std::vector<char> scratch(seq.size(), 0);
  std::vector<SignVector> labels;  // heap order
  std::size_t height = 0;
  while (height < max_height) {
    const bool splittable = std::all_of(
        groups.begin(), groups.end(),
        [](const IndexList& g) { return g.size() >= 2; });
    if (!splittable) break;
    std::vector<IndexList> next;
    next.reserve(2 * groups.size());
    for (const IndexList& g : groups) {
      PositionSplit split = split_positions(seq, g, scratch);
      labels.push_back(std::move(split.sign));
      next.push_back(std::move(split.first));
      next.push_back(std::move(split.second));
    }
    groups = std::move(next);
    ++height;
  }

  LabeledBinaryTree tree(height, seq.dim());
  std::size_t slot = 0;
  for (std::size_t depth = 0; depth < height; ++depth) {
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << depth); ++p) {
      tree.set_label(Vertex{depth, p}, labels[slot++]);
    }
  }
  return Growth{height, std::move(tree), std::move(groups)};
}

TreeLikeCertificate certify(const IndexedSequence& seq, Growth growth) {
  IndexList positions;
  positions.reserve(growth.groups.size());
  for (const IndexList& g : growth.groups) positions.push_back(g.front());
  IndexedSequence sub = seq.select(positions);
  return TreeLikeCertificate{std::move(sub), std::move(growth.tree),
                             std::move(positions)};
}

}  // namespace

BipartiteSplit bipartite_split(const IndexedSequence& seq) {
  IndexList all(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) all[k] = k;
  std::vector<char> scratch(seq.size(), 0);
  PositionSplit split = split_positions(seq, all, scratch);
  return BipartiteSplit{std::move(split.sign), seq.select(split.first),
                        seq.select(split.second)};
}

std::size_t bipartite_split_guarantee(std::size_t n, std::size_t dim) {
  std::size_t size = n / 2;
  for (std::size_t a = 0; a < dim && size > 1; ++a) size = (size + 1) / 2;
  return size;
}

TreeLikeCertificate tree_like_subsequence(const IndexedSequence& seq,
                                          std::size_t height) {
  Growth growth = grow(seq, height);
  if (growth.height < height) {
    throw InsufficientLength(
        "a group became too small to split after " +
        std::to_string(growth.height) + " of " + std::to_string(height) +
        " rounds");
  }
  return certify(seq, std::move(growth));
}

TreeLikeCertificate largest_tree_like_subsequence(const IndexedSequence& seq,
                                                  std::size_t max_height) {
  return certify(seq, grow(seq, max_height));
}

std::optional<LabeledBinaryTree> is_binary_tree_like(
    const IndexedSequence& seq) {
  const std::size_t n = seq.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw NotPowerOfTwo("sequence length " + std::to_string(n) +
                        " is not a power of two");
  }
  const auto m = static_cast<std::size_t>(std::countr_zero(n));
  LabeledBinaryTree tree(m, seq.dim());
  for (std::size_t depth = 0; depth < m; ++depth) {
    const std::size_t span = std::size_t{1} << (m - depth - 1);
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << depth); ++p) {
      const std::size_t left = static_cast<std::size_t>(2 * p) * span;
      tree.set_label(Vertex{depth, p},
                     sign_diff(seq.vector(left), seq.vector(left + span)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sign_diff(seq.vector(i), seq.vector(j)) !=
          tree.label(leaf_ancestor(m, i, j))) {
        return std::nullopt;
      }
    }
  }
  return tree;
}

bool verify_certificate(const TreeLikeCertificate& certificate) {
  const auto& seq = certificate.subsequence;
  const std::size_t m = certificate.tree.height();
  if (seq.size() != (std::size_t{1} << m)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (sign_diff(seq.vector(i), seq.vector(j)) !=
          certificate.tree.label(leaf_ancestor(m, i, j))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace monosub
