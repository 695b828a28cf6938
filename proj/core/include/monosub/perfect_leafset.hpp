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

#ifndef MONOSUB_PERFECT_LEAFSET_HPP_
#define MONOSUB_PERFECT_LEAFSET_HPP_

#include <cstddef>

#include "monosub/rooted_tree.hpp"

namespace monosub {

// Perfect leaf set of size 2^height in a labeled perfect binary tree.
//
// Starts from the singleton leaves. Each round pairs consecutive surviving
// sets, joins each pair under the common ancestor of their roots, and keeps
// the joined sets whose new root has the most common (ambient depth, label);
// ties go to the smallest (depth, label string). The first surviving set is
// returned, sorted.
//
// Always succeeds when 2^m >= (2^(d+1) m)^height for a tree of height m and
// label dimension d. Throws InsufficientTree when fewer than two sets are
// left before the requested height.
LeafSet perfect_leafset_extract(const LabeledBinaryTree& tree,
                                std::size_t height);

struct PerfectLeafset {
  LeafSet leaves;
  std::size_t height = 0;
};

// The same rounds, stopping at the deepest height reachable (at most
// `max_height`).
PerfectLeafset largest_perfect_leafset(const LabeledBinaryTree& tree,
                                       std::size_t max_height);

}  // namespace monosub

#endif  // MONOSUB_PERFECT_LEAFSET_HPP_
