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

// Perfect binary trees addressed arithmetically.
//
// The perfect binary tree of height m is never materialized. A vertex is a
// pair (depth, position) with 0 <= position < 2^depth; the children of
// (k, p) are (k + 1, 2p) and (k + 1, 2p + 1), so the leaves are the vertices
// (m, 0) ... (m, 2^m - 1) in left-to-right order and leaf i is simply i.
//
// Common ancestors reduce to bit arithmetic on positions: the ancestor of
// (k, p) at depth j is (j, p >> (k - j)), and two leaves a != b meet at depth
// m - bit_width(a ^ b), i.e. just above the most significant differing digit
// of their m-digit binary expansions.

#ifndef MONOSUB_ROOTED_TREE_HPP_
#define MONOSUB_ROOTED_TREE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monosub/matrix.hpp"

namespace monosub {

// Height limit keeps positions inside 64-bit words.
inline constexpr std::size_t kMaxTreeHeight = 62;

using Leaf = std::uint64_t;
using LeafSet = std::vector<Leaf>;

struct Vertex {
  std::size_t depth = 0;
  std::uint64_t position = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

// Ancestor of `v` at depth `depth` (<= v.depth).
Vertex ancestor_at(const Vertex& v, std::size_t depth);

// Every vertex is its own ancestor.
bool is_ancestor(const Vertex& ancestor, const Vertex& v);
bool related(const Vertex& a, const Vertex& b);

// Deepest common ancestor of two vertices of the same tree.
Vertex common_ancestor(const Vertex& a, const Vertex& b);

// Common ancestor of two leaves of the height-m tree. Throws LeafOutOfRange.
Vertex leaf_ancestor(std::size_t m, Leaf a, Leaf b);

// Common ancestor of a non-empty leaf set. Throws EmptySet, LeafOutOfRange.
Vertex common_ancestor(std::size_t m, std::span<const Leaf> leaves);

// The rooted tree induced by a vertex set: its vertices are the pairwise
// common ancestors, its root is the common ancestor of the whole set, and
// each vertex hangs below its deepest proper ancestor within the set.
class InducedTree {
 public:
  // Throws EmptySet on an empty input.
  static InducedTree of_vertices(std::span<const Vertex> generators);

  // Sorted by (depth, position).
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Vertex& root() const noexcept { return vertices_[root_]; }

  bool contains(const Vertex& v) const;
  // Parent within the induced tree; nothing for the root. Throws
  // InvalidArgument for vertices outside the tree.
  std::optional<Vertex> parent(const Vertex& v) const;
  std::vector<Vertex> children(const Vertex& v) const;
  // Distance from the induced root.
  std::size_t local_depth(const Vertex& v) const;

  // Common ancestor computed with the induced parent links only.
  Vertex common_ancestor(const Vertex& a, const Vertex& b) const;

  // (T[X])[Y] computed inside this tree. Every element of Y must be a
  // vertex of this tree.
  InducedTree restricted_to(std::span<const Vertex> subset) const;

  // Height h if this is a perfect binary tree of height h.
  std::optional<std::size_t> perfect_height() const;

  // Parenthesized debug form, e.g. "(0.0 (1.0 2.0 2.1) 1.1)".
  std::string to_string() const;

  friend bool operator==(const InducedTree&, const InducedTree&) = default;

 private:
  InducedTree(std::vector<Vertex> vertices, std::vector<std::size_t> parents,
              std::size_t root);
  std::size_t index_of(const Vertex& v) const;

  std::vector<Vertex> vertices_;
  std::vector<std::size_t> parents_;  // npos for the root
  std::size_t root_ = 0;
};

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

// T[X] for a leaf set X of the height-m tree. Throws EmptySet,
// LeafOutOfRange.
InducedTree induced_subtree(std::size_t m, std::span<const Leaf> leaves);

// The leaf set {sum over z in Z of b_z * 2^(m-1-z) : b_z in {0,1}}. It
// induces a perfect binary tree of height |Z| whose non-leaf vertices sit
// exactly at the depths in Z. Throws DepthOutOfRange.
LeafSet levels_leafset(std::size_t m, std::span<const std::size_t> depths);

// Perfect binary tree of height m with a sign-vector label on each of its
// 2^m - 1 non-leaf vertices.
class LabeledBinaryTree {
 public:
  // All labels start as the all-plus vector of length `dim`.
  LabeledBinaryTree(std::size_t height, std::size_t dim);

  static LabeledBinaryTree constant(std::size_t height, const SignVector& label);

  std::size_t height() const noexcept { return height_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t leaf_count() const noexcept { return std::size_t{1} << height_; }

  // Throws InvalidArgument for leaves or vertices outside the tree, and
  // LengthMismatch for labels of the wrong dimension.
  const SignVector& label(const Vertex& v) const;
  void set_label(const Vertex& v, SignVector label);

  friend bool operator==(const LabeledBinaryTree&,
                         const LabeledBinaryTree&) = default;

 private:
  std::size_t slot(const Vertex& v) const;

  std::size_t height_;
  std::size_t dim_;
  std::vector<SignVector> labels_;  // heap order: (k, p) -> 2^k - 1 + p
};

// Labels w_0 ... w_{h-1} by induced depth when the inherited labeling of a
// perfect induced tree only depends on depth. Throws NotPerfect when `tree`
// is not a perfect binary tree.
std::optional<std::vector<SignVector>> is_layered(
    const LabeledBinaryTree& labels, const InducedTree& tree);

// Whether S induces a perfect binary tree whose inherited labeling is
// layered.
bool is_perfect_leafset(const LabeledBinaryTree& labels,
                        std::span<const Leaf> leaves);

}  // namespace monosub

#endif  // MONOSUB_ROOTED_TREE_HPP_
