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

#include "monosub/perfect_leafset.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace monosub {
namespace {

struct Candidate {
  LeafSet leaves;
  Vertex root;
};

// One joining round. Returns false when fewer than two candidates remain.
bool join_round(const LabeledBinaryTree& tree,
                std::vector<Candidate>& candidates) {
  if (candidates.size() < 2) return false;
  using Key = std::pair<std::size_t, std::string>;
  std::map<Key, std::vector<std::size_t>> groups;
  std::vector<Vertex> joins(candidates.size() / 2);
  for (std::size_t j = 0; j < joins.size(); ++j) {
    joins[j] = common_ancestor(candidates[2 * j].root,
                               candidates[2 * j + 1].root);
    groups[{joins[j].depth, tree.label(joins[j]).to_string()}].push_back(j);
  }
  const std::vector<std::size_t>* best = nullptr;
  for (const auto& [key, members] : groups) {
    if (best == nullptr || members.size() > best->size()) best = &members;
  }

  std::vector<Candidate> next;
  next.reserve(best->size());
  for (std::size_t j : *best) {
    Candidate joined{std::move(candidates[2 * j].leaves), joins[j]};
    const LeafSet& right = candidates[2 * j + 1].leaves;
    joined.leaves.insert(joined.leaves.end(), right.begin(), right.end());
    next.push_back(std::move(joined));
  }
  candidates = std::move(next);
  return true;
}

std::vector<Candidate> singletons(const LabeledBinaryTree& tree) {
  std::vector<Candidate> out;
  out.reserve(tree.leaf_count());
  for (Leaf leaf = 0; leaf < tree.leaf_count(); ++leaf) {
    out.push_back(Candidate{LeafSet{leaf}, Vertex{tree.height(), leaf}});
  }
  return out;
}

}  // namespace

LeafSet perfect_leafset_extract(const LabeledBinaryTree& tree,
                                std::size_t height) {
  std::vector<Candidate> candidates = singletons(tree);
  for (std::size_t k = 1; k <= height; ++k) {
    if (!join_round(tree, candidates)) {
      throw InsufficientTree("only " + std::to_string(candidates.size()) +
                             " perfect set(s) left before height " +
                             std::to_string(k));
    }
  }
  LeafSet out = std::move(candidates.front().leaves);
  std::sort(out.begin(), out.end());
  return out;
}

PerfectLeafset largest_perfect_leafset(const LabeledBinaryTree& tree,
                                       std::size_t max_height) {
  std::vector<Candidate> candidates = singletons(tree);
  std::size_t height = 0;
  while (height < max_height && join_round(tree, candidates)) ++height;
  LeafSet out = std::move(candidates.front().leaves);
  std::sort(out.begin(), out.end());
  return PerfectLeafset{std::move(out), height};
}

}  // namespace monosub
