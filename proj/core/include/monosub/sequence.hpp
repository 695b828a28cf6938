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

// Vector sequences, the bipartite split and binary-tree-like subsequences.
//
// For sign vector s, v precedes w "under s" when v comes earlier in the
// sequence and sign(w - v) = s. A sequence of 2^m vectors is binary-tree-like
// when some labeling of the height-m perfect binary tree gives, for every
// i < j, sign(v_j - v_i) = label(common_ancestor(i, j)).

#ifndef MONOSUB_SEQUENCE_HPP_
#define MONOSUB_SEQUENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monosub/matrix.hpp"
#include "monosub/rooted_tree.hpp"

namespace monosub {

// A subsequence of d-dimensional integer vectors, each tagged with its index
// in the original sequence. Tags are strictly increasing.
class IndexedSequence {
 public:
  explicit IndexedSequence(std::size_t dim) : dim_(dim) {}
  // `coords` holds the vectors back to back. Throws InvalidArgument when the
  // sizes disagree or the tags are not strictly increasing.
  IndexedSequence(std::size_t dim, std::vector<std::int64_t> coords,
                  IndexList tags);

  // Tags 0..N-1.
  static IndexedSequence from_vectors(
      const std::vector<std::vector<std::int64_t>>& vectors);

  // Columns of `m` after replacing each row by its tie-broken ranks, so
  // every coordinate is pairwise distinct and every comparison is strict.
  static IndexedSequence from_columns(const Matrix& m);

  std::size_t size() const noexcept { return tags_.size(); }
  bool empty() const noexcept { return tags_.empty(); }
  std::size_t dim() const noexcept { return dim_; }

  std::size_t tag(std::size_t k) const { return tags_[k]; }
  const IndexList& tags() const noexcept { return tags_; }
  std::span<const std::int64_t> vector(std::size_t k) const {
    return std::span<const std::int64_t>(coords_).subspan(k * dim_, dim_);
  }
  std::int64_t coord(std::size_t k, std::size_t a) const {
    return coords_[k * dim_ + a];
  }

  // Elements at the given (increasing) positions.
  IndexedSequence select(std::span<const std::size_t> positions) const;

  // Throws TiedCoordinate if two elements agree in some coordinate.
  void check_distinct() const;

  friend bool operator==(const IndexedSequence&,
                         const IndexedSequence&) = default;

 private:
  std::size_t dim_;
  std::vector<std::int64_t> coords_;
  IndexList tags_;
};

struct BipartiteSplit {
  SignVector sign;
  IndexedSequence first;   // every element precedes every element of second
  IndexedSequence second;  // under `sign`
};

// Equal-size subsequences A, B and s with A preceding B under s.
//
// Starts from the first and second halves (an odd middle element is
// dropped) and walks the coordinates: the union is cut at its median in that
// coordinate and the orientation keeping more of A wins, '+' on ties. Both
// parts keep exactly the same size at every step, which is at least
// ceil(floor(N/2) / 2^d).
//
// Throws TooShort for fewer than two elements and TiedCoordinate on ties.
BipartiteSplit bipartite_split(const IndexedSequence& seq);

// The size bipartite_split always reaches: ceil(floor(N/2) / 2^d).
std::size_t bipartite_split_guarantee(std::size_t n, std::size_t dim);

struct TreeLikeCertificate {
  IndexedSequence subsequence;  // length 2^height
  LabeledBinaryTree tree;       // associated labeling
  IndexList positions;          // positions of the subsequence in the input
};

// Binary-tree-like subsequence of length 2^height.
//
// Repeatedly splits every group with bipartite_split, labelling the vertex
// joining the two halves with the split sign; after `height` rounds the
// earliest element of each of the 2^height groups is kept. Guaranteed to
// succeed when N >= 2^(height (d + 1)); otherwise throws InsufficientLength
// once a group is too small to split.
TreeLikeCertificate tree_like_subsequence(const IndexedSequence& seq,
                                          std::size_t height);

// Same construction, stopping at the deepest round every group survives
// (capped at `max_height`). Throws InsufficientLength on an empty input.
TreeLikeCertificate largest_tree_like_subsequence(const IndexedSequence& seq,
                                                  std::size_t max_height);

// The unique associated labeling when `seq` is binary-tree-like. Throws
// NotPowerOfTwo for lengths that are not powers of two.
std::optional<LabeledBinaryTree> is_binary_tree_like(const IndexedSequence& seq);

// Checks the defining identity over all pairs.
bool verify_certificate(const TreeLikeCertificate& certificate);

}  // namespace monosub

#endif  // MONOSUB_SEQUENCE_HPP_
