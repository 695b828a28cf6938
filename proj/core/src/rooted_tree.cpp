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

#include "monosub/rooted_tree.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace monosub {
namespace {

void check_height(std::size_t m) {
  if (m > kMaxTreeHeight) {
    throw InvalidArgument("tree height " + std::to_string(m) +
                          " exceeds the supported maximum");
  }
}

void check_leaf(std::size_t m, Leaf leaf) {
  check_height(m);
  if (leaf >= (Leaf{1} << m)) {
    throw LeafOutOfRange("leaf " + std::to_string(leaf) +
                         " outside a tree with " +
                         std::to_string(Leaf{1} << m) + " leaves");
  }
}

}  // namespace

std::string to_string(const Vertex& v) {
  return std::to_string(v.depth) + "." + std::to_string(v.position);
}

Vertex ancestor_at(const Vertex& v, std::size_t depth) {
  if (depth > v.depth) {
    throw InvalidArgument("ancestor_at: requested depth below the vertex");
  }
  return Vertex{depth, v.position >> (v.depth - depth)};
}

bool is_ancestor(const Vertex& ancestor, const Vertex& v) {
  return ancestor.depth <= v.depth && ancestor_at(v, ancestor.depth) == ancestor;
}

bool related(const Vertex& a, const Vertex& b) {
  return is_ancestor(a, b) || is_ancestor(b, a);
}

Vertex common_ancestor(const Vertex& a, const Vertex& b) {
  const std::size_t depth = std::min(a.depth, b.depth);
  const std::uint64_t x = ancestor_at(a, depth).position;
  const std::uint64_t y = ancestor_at(b, depth).position;
  const auto shift = static_cast<std::size_t>(std::bit_width(x ^ y));
  return Vertex{depth - shift, x >> shift};
}

Vertex leaf_ancestor(std::size_t m, Leaf a, Leaf b) {
  check_leaf(m, a);
  check_leaf(m, b);
  return common_ancestor(Vertex{m, a}, Vertex{m, b});
}

Vertex common_ancestor(std::size_t m, std::span<const Leaf> leaves) {
  if (leaves.empty()) throw EmptySet("common ancestor of an empty leaf set");
  for (Leaf leaf : leaves) check_leaf(m, leaf);
  const auto [lo, hi] = std::minmax_element(leaves.begin(), leaves.end());
  // Leaves are in left-to-right order, so the extremes determine the rest.
  return leaf_ancestor(m, *lo, *hi);
}

InducedTree::InducedTree(std::vector<Vertex> vertices,
                         std::vector<std::size_t> parents, std::size_t root)
    : vertices_(std::move(vertices)), parents_(std::move(parents)), root_(root) {}

InducedTree InducedTree::of_vertices(std::span<const Vertex> generators) {
  if (generators.empty()) throw EmptySet("induced tree of an empty set");
  std::vector<Vertex> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Vertex> vertices;
  const bool all_same_depth =
      std::all_of(gens.begin(), gens.end(),
                  [&](const Vertex& v) { return v.depth == gens[0].depth; });
  if (all_same_depth) {
    // Pairwise common ancestors of left-to-right ordered vertices at one
    // depth are already realized by neighbours.
    vertices = gens;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
      vertices.push_back(monosub::common_ancestor(gens[i], gens[i + 1]));
    }
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i; j < gens.size(); ++j) {
        vertices.push_back(monosub::common_ancestor(gens[i], gens[j]));
      }
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::vector<std::size_t> parents(vertices.size(), kNoParent);
  std::size_t root = kNoParent;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex& v = vertices[i];
    for (std::size_t k = v.depth; k-- > 0;) {
      const Vertex up = ancestor_at(v, k);
      const auto it = std::lower_bound(vertices.begin(), vertices.end(), up);
      if (it != vertices.end() && *it == up) {
        parents[i] = static_cast<std::size_t>(it - vertices.begin());
        break;
      }
    }
    if (parents[i] == kNoParent) root = i;
  }
  return InducedTree(std::move(vertices), std::move(parents), root);
}

std::size_t InducedTree::index_of(const Vertex& v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw InvalidArgument("vertex " + monosub::to_string(v) +
                          " is not in the induced tree");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool InducedTree::contains(const Vertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<Vertex> InducedTree::parent(const Vertex& v) const {
  const std::size_t p = parents_[index_of(v)];
  if (p == kNoParent) return std::nullopt;
  return vertices_[p];
}

std::vector<Vertex> InducedTree::children(const Vertex& v) const {
  const std::size_t self = index_of(v);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (parents_[i] == self) out.push_back(vertices_[i]);
  }
  return out;
}

std::size_t InducedTree::local_depth(const Vertex& v) const {
  std::size_t depth = 0;
  for (std::size_t i = index_of(v); parents_[i] != kNoParent; i = parents_[i]) {
    ++depth;
  }
  return depth;
}

Vertex InducedTree::common_ancestor(const Vertex& a, const Vertex& b) const {
  std::size_t i = index_of(a);
  std::size_t j = index_of(b);
  std::size_t di = local_depth(a);
  std::size_t dj = local_depth(b);
  while (di > dj) {
    i = parents_[i];
    --di;
  }
  while (dj > di) {
    j = parents_[j];
    --dj;
  }
  while (i != j) {
    i = parents_[i];
    j = parents_[j];
  }
  return vertices_[i];
}

InducedTree InducedTree::restricted_to(std::span<const Vertex> subset) const {
  if (subset.empty()) throw EmptySet("restriction to an empty set");
  std::vector<Vertex> vertices;
  for (const Vertex& a : subset) {
    for (const Vertex& b : subset) vertices.push_back(common_ancestor(a, b));
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  // Parent: nearest proper ancestor along this tree's links that survives.
  std::vector<std::size_t> parents(vertices.size(), kNoParent);
  std::size_t root = kNoParent;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t p = parents_[index_of(vertices[i])]; p != kNoParent;
         p = parents_[p]) {
      const auto it =
          std::lower_bound(vertices.begin(), vertices.end(), vertices_[p]);
      if (it != vertices.end() && *it == vertices_[p]) {
        parents[i] = static_cast<std::size_t>(it - vertices.begin());
        break;
      }
    }
    if (parents[i] == kNoParent) root = i;
  }
  return InducedTree(std::move(vertices), std::move(parents), root);
}

std::optional<std::size_t> InducedTree::perfect_height() const {
  std::vector<std::size_t> child_count(vertices_.size(), 0);
  for (std::size_t p : parents_) {
    if (p != kNoParent) ++child_count[p];
  }
  std::optional<std::size_t> leaf_depth;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (child_count[i] == 0) {
      const std::size_t depth = local_depth(vertices_[i]);
      if (leaf_depth && *leaf_depth != depth) return std::nullopt;
      leaf_depth = depth;
    } else if (child_count[i] != 2) {
      return std::nullopt;
    }
  }
  return leaf_depth;
}

std::string InducedTree::to_string() const {
  std::function<std::string(std::size_t)> render = [&](std::size_t i) {
    std::vector<std::size_t> kids;
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (parents_[k] == i) kids.push_back(k);
    }
    if (kids.empty()) return monosub::to_string(vertices_[i]);
    std::string out = "(" + monosub::to_string(vertices_[i]);
    for (std::size_t k : kids) out += " " + render(k);
    return out + ")";
  };
  return render(root_);
}

InducedTree induced_subtree(std::size_t m, std::span<const Leaf> leaves) {
  if (leaves.empty()) throw EmptySet("induced subtree of an empty leaf set");
  std::vector<Vertex> generators;
  generators.reserve(leaves.size());
  for (Leaf leaf : leaves) {
    check_leaf(m, leaf);
    generators.push_back(Vertex{m, leaf});
  }
  return InducedTree::of_vertices(generators);
}

LeafSet levels_leafset(std::size_t m, std::span<const std::size_t> depths) {
  check_height(m);
  std::vector<std::size_t> z(depths.begin(), depths.end());
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  for (std::size_t depth : z) {
    if (depth >= m) {
      throw DepthOutOfRange("depth " + std::to_string(depth) +
                            " is not below the height " + std::to_string(m));
    }
  }
  LeafSet out;
  const std::uint64_t combos = std::uint64_t{1} << z.size();
  out.reserve(combos);
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    Leaf leaf = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if ((mask >> k) & 1U) leaf |= Leaf{1} << (m - 1 - z[k]);
    }
    out.push_back(leaf);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledBinaryTree::LabeledBinaryTree(std::size_t height, std::size_t dim)
    : height_(height), dim_(dim) {
  if (height > 30) {
    throw InvalidArgument("labeled trees are materialized; height " +
                          std::to_string(height) + " is too large");
  }
  labels_.assign((std::size_t{1} << height) - 1, SignVector(dim, Sign::kPlus));
}

LabeledBinaryTree LabeledBinaryTree::constant(std::size_t height,
                                              const SignVector& label) {
  LabeledBinaryTree tree(height, label.size());
  std::fill(tree.labels_.begin(), tree.labels_.end(), label);
  return tree;
}

std::size_t LabeledBinaryTree::slot(const Vertex& v) const {
  if (v.depth >= height_ || v.position >= (std::uint64_t{1} << v.depth)) {
    throw InvalidArgument("vertex " + monosub::to_string(v) +
                          " is not a non-leaf vertex of the tree");
  }
  return (std::size_t{1} << v.depth) - 1 + static_cast<std::size_t>(v.position);
}

const SignVector& LabeledBinaryTree::label(const Vertex& v) const {
  return labels_[slot(v)];
}

void LabeledBinaryTree::set_label(const Vertex& v, SignVector label) {
  if (label.size() != dim_) {
    throw LengthMismatch("label dimension " + std::to_string(label.size()) +
                         " differs from tree dimension " +
                         std::to_string(dim_));
  }
  labels_[slot(v)] = std::move(label);
}

std::optional<std::vector<SignVector>> is_layered(
    const LabeledBinaryTree& labels, const InducedTree& tree) {
  const auto height = tree.perfect_height();
  if (!height) throw NotPerfect("induced tree is not a perfect binary tree");
  std::vector<std::optional<SignVector>> per_depth(*height);
  for (const Vertex& v : tree.vertices()) {
    if (tree.children(v).empty()) continue;
    const std::size_t depth = tree.local_depth(v);
    const SignVector& label = labels.label(v);
    if (!per_depth[depth]) {
      per_depth[depth] = label;
    } else if (*per_depth[depth] != label) {
      return std::nullopt;
    }
  }
  std::vector<SignVector> out;
  out.reserve(per_depth.size());
  for (auto& w : per_depth) out.push_back(std::move(*w));
  return out;
}

bool is_perfect_leafset(const LabeledBinaryTree& labels,
                        std::span<const Leaf> leaves) {
  const InducedTree tree = induced_subtree(labels.height(), leaves);
  if (!tree.perfect_height()) return false;
  return is_layered(labels, tree).has_value();
}

}  // namespace monosub
