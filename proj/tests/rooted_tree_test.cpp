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


#include <gtest/gtest.h>

#include <set>

#include "checks.hpp"
#include "monosub/rooted_tree.hpp"
#include "support.hpp"

namespace monosub {
namespace {

using testing::leaves_of_mask;
using testing::pairwise_ancestors;
using testing::walked_ancestor;

TEST(LeafAncestor, Examples) {
  EXPECT_EQ(leaf_ancestor(3, 0, 7), (Vertex{0, 0}));
  EXPECT_EQ(leaf_ancestor(3, 4, 5), (Vertex{2, 2}));
  EXPECT_EQ(leaf_ancestor(3, 4, 5), walked_ancestor(3, 4, 5));
  EXPECT_EQ(leaf_ancestor(3, 3, 3), (Vertex{3, 3}));
  EXPECT_THROW(leaf_ancestor(3, 0, 8), LeafOutOfRange);
}

TEST(LeafAncestor, DepthIsFirstDifferingDigit) {
  // m-digit expansions of 2 = 010 and 3 = 011 first differ at digit 3.
  EXPECT_EQ(leaf_ancestor(3, 2, 3).depth, 2U);
  // 001 vs 100 differ at digit 1.
  EXPECT_EQ(leaf_ancestor(3, 1, 4).depth, 0U);
}

TEST(LeafAncestor, MatchesPathWalkingUpToHeightEight) {
  for (std::size_t m = 0; m <= 8; ++m) {
    const auto tally = testing::check_leaf_ancestor(m);
    EXPECT_EQ(tally.failures, 0U) << "m=" << m;
    EXPECT_EQ(tally.cases, (std::uint64_t{1} << m) * (std::uint64_t{1} << m));
  }
}

TEST(CommonAncestor, Examples) {
  LeafSet all(8);
  for (Leaf i = 0; i < 8; ++i) all[i] = i;
  EXPECT_EQ(common_ancestor(3, all), (Vertex{0, 0}));
  const LeafSet right{4, 5, 6};
  EXPECT_EQ(common_ancestor(3, right), (Vertex{1, 1}));
  const LeafSet single{5};
  EXPECT_EQ(common_ancestor(3, single), (Vertex{3, 5}));
  EXPECT_THROW(common_ancestor(3, LeafSet{}), EmptySet);
}

// Deepest vertex whose leaf range covers S, by scanning every vertex.
TEST(CommonAncestor, AgreesWithAncestorSetOracle) {
  const std::size_t m = 4;
  for (std::uint64_t mask = 1; mask < (1U << 16); mask += 7) {
    const LeafSet s = leaves_of_mask(mask);
    Vertex best{0, 0};
    for (std::size_t k = 0; k <= m; ++k) {
      for (std::uint64_t p = 0; p < (std::uint64_t{1} << k); ++p) {
        const Vertex v{k, p};
        bool covers = true;
        for (Leaf leaf : s) covers = covers && is_ancestor(v, Vertex{m, leaf});
        if (covers && k >= best.depth) best = v;
      }
    }
    EXPECT_EQ(common_ancestor(m, s), best);
    // It is realized by some pair.
    bool realized = false;
    for (Leaf a : s) {
      for (Leaf b : s) realized = realized || leaf_ancestor(m, a, b) == best;
    }
    EXPECT_TRUE(realized);
  }
}

TEST(InducedSubtree, Examples) {
  const LeafSet all{0, 1, 2, 3};
  const InducedTree whole = induced_subtree(2, all);
  EXPECT_EQ(whole.size(), 7U);
  EXPECT_EQ(whole.perfect_height(), 2U);

  const InducedTree pair = induced_subtree(2, LeafSet{0, 1});
  EXPECT_EQ(pair.vertices(), (std::vector<Vertex>{{1, 0}, {2, 0}, {2, 1}}));
  EXPECT_EQ(pair.root(), (Vertex{1, 0}));

  const InducedTree split = induced_subtree(2, LeafSet{0, 2});
  EXPECT_EQ(split.vertices(), (std::vector<Vertex>{{0, 0}, {2, 0}, {2, 2}}));
  EXPECT_EQ(split.parent(Vertex{2, 2}), (Vertex{0, 0}));
  EXPECT_EQ(split.parent(Vertex{0, 0}), std::nullopt);
  EXPECT_EQ(split.to_string(), "(0.0 2.0 2.2)");
  EXPECT_THROW(induced_subtree(2, LeafSet{}), EmptySet);
  EXPECT_THROW(induced_subtree(2, LeafSet{4}), LeafOutOfRange);
}

TEST(InducedSubtree, VerticesArePairwiseAncestors) {
  Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng.below(5);
    const std::uint64_t mask = 1 + rng.below((std::uint64_t{1} << (1U << m)) - 1);
    const LeafSet x = leaves_of_mask(mask);
    const InducedTree tree = induced_subtree(m, x);
    const auto oracle = pairwise_ancestors(m, x);
    EXPECT_EQ(tree.vertices(), std::vector<Vertex>(oracle.begin(), oracle.end()));
    EXPECT_EQ(tree.root(), common_ancestor(m, x));
    EXPECT_LE(tree.size(), 2 * x.size() - 1);
    // Induced common ancestors agree with the ambient ones.
    for (const Vertex& a : tree.vertices()) {
      for (const Vertex& b : tree.vertices()) {
        EXPECT_EQ(tree.common_ancestor(a, b), common_ancestor(a, b));
      }
    }
    // Parents are the nearest induced ancestors.
    for (const Vertex& v : tree.vertices()) {
      const auto parent = tree.parent(v);
      if (!parent) {
        EXPECT_EQ(v, tree.root());
        continue;
      }
      EXPECT_TRUE(is_ancestor(*parent, v));
      for (const Vertex& w : tree.vertices()) {
        if (w != v && w != *parent && is_ancestor(w, v)) {
          EXPECT_TRUE(is_ancestor(w, *parent));
        }
      }
    }
  }
}

TEST(InducedSubtree, DisjointUnionOfUnrelatedParts) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto tally = testing::check_disjoint_union(m);
    EXPECT_EQ(tally.failures, 0U) << "m=" << m;
    EXPECT_GT(tally.cases, 0U);
  }
}

TEST(InducedSubtree, OrderedSetsHaveDistinctRoots) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto tally = testing::check_ordered_roots(m);
    EXPECT_EQ(tally.failures, 0U) << "m=" << m;
    EXPECT_GT(tally.cases, 0U);
  }
}

TEST(InducedSubtree, RestrictionIsCoherent) {
  for (std::size_t m = 0; m <= 3; ++m) {
    const auto tally = testing::check_restriction(m);
    EXPECT_EQ(tally.failures, 0U) << "m=" << m;
  }
}

// All of m = 4 is 3^16 pairs; sample it instead.
TEST(InducedSubtree, RestrictionIsCoherentAtHeightFour) {
  Rng rng(16);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::uint64_t xm = 1 + rng.below(0xFFFF);
    const std::uint64_t ym = xm & rng.below(0x10000);
    if (ym == 0) continue;
    const InducedTree tx = induced_subtree(4, leaves_of_mask(xm));
    std::vector<Vertex> gens;
    for (Leaf leaf : leaves_of_mask(ym)) gens.push_back(Vertex{4, leaf});
    ASSERT_EQ(tx.restricted_to(gens), induced_subtree(4, leaves_of_mask(ym)))
        << xm << " " << ym;
  }
}

TEST(LevelsLeafset, Examples) {
  const std::vector<std::size_t> z02{0, 2};
  EXPECT_EQ(levels_leafset(3, z02), (LeafSet{0, 1, 4, 5}));
  EXPECT_EQ(levels_leafset(5, std::vector<std::size_t>{}), (LeafSet{0}));
  const std::vector<std::size_t> z01{0, 1};
  EXPECT_EQ(levels_leafset(2, z01), (LeafSet{0, 1, 2, 3}));
  const std::vector<std::size_t> bad{3};
  EXPECT_THROW(levels_leafset(3, bad), DepthOutOfRange);
}

// The formula instance is the first of all 4-leaf sets meeting the
// postcondition for Z = {0, 2}.
TEST(LevelsLeafset, FirstAmongBruteForceCandidates) {
  const std::size_t m = 3;
  std::vector<LeafSet> candidates;
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) != 4) continue;
    const LeafSet q = leaves_of_mask(mask);
    const InducedTree tree = induced_subtree(m, q);
    if (tree.perfect_height() != 2U) continue;
    std::set<std::size_t> depths;
    for (const Vertex& v : tree.vertices()) {
      if (v.depth < m) depths.insert(v.depth);
    }
    if (depths == std::set<std::size_t>{0, 2}) candidates.push_back(q);
  }
  std::sort(candidates.begin(), candidates.end());
  ASSERT_FALSE(candidates.empty());
  const std::vector<std::size_t> z{0, 2};
  EXPECT_EQ(levels_leafset(m, z), candidates.front());
}

TEST(LevelsLeafset, PostconditionForEveryDepthSet) {
  for (std::size_t m = 0; m <= 6; ++m) {
    const auto tally = testing::check_levels(m);
    EXPECT_EQ(tally.failures, 0U) << "m=" << m;
    EXPECT_EQ(tally.cases, std::uint64_t{1} << m);
  }
}

TEST(LabeledTree, LabelsAndBounds) {
  LabeledBinaryTree tree(2, 3);
  EXPECT_EQ(tree.leaf_count(), 4U);
  EXPECT_EQ(tree.label(Vertex{1, 1}), SignVector::parse("+++"));
  tree.set_label(Vertex{1, 1}, SignVector::parse("-+-"));
  EXPECT_EQ(tree.label(Vertex{1, 1}), SignVector::parse("-+-"));
  EXPECT_THROW(tree.set_label(Vertex{0, 0}, SignVector::parse("+")), LengthMismatch);
  EXPECT_THROW((void)tree.label(Vertex{2, 0}), InvalidArgument);
  EXPECT_THROW((void)tree.label(Vertex{1, 2}), InvalidArgument);
}

TEST(Layered, Examples) {
  const LabeledBinaryTree flat(0, 2);
  const auto single = is_layered(flat, induced_subtree(0, LeafSet{0}));
  ASSERT_TRUE(single.has_value());
  EXPECT_TRUE(single->empty());

  const auto constant = LabeledBinaryTree::constant(3, SignVector::parse("+-"));
  LeafSet all(8);
  for (Leaf i = 0; i < 8; ++i) all[i] = i;
  const auto layers = is_layered(constant, induced_subtree(3, all));
  ASSERT_TRUE(layers.has_value());
  EXPECT_EQ(layers->size(), 3U);

  LabeledBinaryTree mixed(2, 1);
  mixed.set_label(Vertex{1, 0}, SignVector::parse("+"));
  mixed.set_label(Vertex{1, 1}, SignVector::parse("-"));
  EXPECT_FALSE(is_layered(mixed, induced_subtree(2, LeafSet{0, 1, 2, 3})).has_value());

  EXPECT_THROW(is_layered(mixed, induced_subtree(2, LeafSet{0, 1, 2})), NotPerfect);
}

TEST(Layered, ReadsLabelsByInducedDepth) {
  LabeledBinaryTree tree(3, 1);
  tree.set_label(Vertex{0, 0}, SignVector::parse("-"));
  tree.set_label(Vertex{2, 0}, SignVector::parse("+"));
  tree.set_label(Vertex{2, 2}, SignVector::parse("+"));
  const auto layers = is_layered(tree, induced_subtree(3, LeafSet{0, 1, 4, 5}));
  ASSERT_TRUE(layers.has_value());
  EXPECT_EQ(*layers, (std::vector<SignVector>{SignVector::parse("-"),
                                              SignVector::parse("+")}));
}

TEST(PerfectLeafsetPredicate, Examples) {
  Rng rng(2);
  const LabeledBinaryTree tree = testing::random_labels(rng, 3, 2);
  EXPECT_TRUE(is_perfect_leafset(tree, LeafSet{5}));
  const auto constant = LabeledBinaryTree::constant(3, SignVector::parse("++"));
  EXPECT_TRUE(is_perfect_leafset(constant, LeafSet{0, 1, 2, 3, 4, 5, 6, 7}));
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) == 3) {
      EXPECT_FALSE(is_perfect_leafset(constant, leaves_of_mask(mask)));
    }
  }
}

}  // namespace
}  // namespace monosub
