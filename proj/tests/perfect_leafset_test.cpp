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

#include <algorithm>
#include <set>
#include <string>

#include "monosub/perfect_leafset.hpp"
#include "support.hpp"

namespace monosub {
namespace {

struct Levels {
  bool perfect = false;
  bool layered = false;        // one label per level
  bool single_depths = false;  // one ambient depth per level
};

// T[Z] examined level by level, straight from the definitions.
Levels examine(const LabeledBinaryTree& tree, const LeafSet& z) {
  const auto induced = induced_subtree(tree.height(), z);
  const auto h = induced.perfect_height();
  Levels out;
  if (!h || (std::size_t{1} << *h) != z.size()) return out;
  out.perfect = true;
  std::vector<std::set<std::size_t>> depths(*h);
  std::vector<std::set<std::string>> labels(*h);
  for (const Vertex& v : induced.vertices()) {
    const std::size_t local = induced.local_depth(v);
    if (local == *h) continue;
    depths[local].insert(v.depth);
    labels[local].insert(tree.label(v).to_string());
  }
  out.layered = std::all_of(labels.begin(), labels.end(),
                            [](const auto& l) { return l.size() == 1; });
  out.single_depths = std::all_of(depths.begin(), depths.end(),
                                  [](const auto& d) { return d.size() == 1; });
  return out;
}

bool perfect_by_definition(const LabeledBinaryTree& tree, const LeafSet& z) {
  const Levels levels = examine(tree, z);
  return levels.perfect && levels.layered;
}

// The extraction groups joins by ambient depth too.
bool extracted_shape(const LabeledBinaryTree& tree, const LeafSet& z) {
  const Levels levels = examine(tree, z);
  return levels.perfect && levels.layered && levels.single_depths;
}

TEST(PerfectLeafset, HeightZeroIsTheFirstLeaf) {
  Rng rng(1);
  const auto tree = testing::random_labels(rng, 4, 2);
  EXPECT_EQ(perfect_leafset_extract(tree, 0), (LeafSet{0}));
}

TEST(PerfectLeafset, ConstantLabelsGiveTheLeftmostLeaves) {
  const auto tree = LabeledBinaryTree::constant(5, SignVector::parse("+-"));
  for (std::size_t h = 0; h <= 5; ++h) {
    LeafSet expected;
    for (Leaf i = 0; i < (Leaf{1} << h); ++i) expected.push_back(i);
    EXPECT_EQ(perfect_leafset_extract(tree, h), expected) << h;
  }
}

TEST(PerfectLeafset, TooShallowTreeThrows) {
  const auto tree = LabeledBinaryTree::constant(2, SignVector::parse("+"));
  EXPECT_THROW(perfect_leafset_extract(tree, 3), InsufficientTree);
}

TEST(PerfectLeafset, GuaranteedRegimeOnRandomLabels) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto tree = testing::random_labels(rng, 11, 1);
    const auto z = perfect_leafset_extract(tree, 2);
    ASSERT_EQ(z.size(), 4U);
    EXPECT_TRUE(std::is_sorted(z.begin(), z.end()));
    EXPECT_TRUE(extracted_shape(tree, z)) << "trial " << trial;
    EXPECT_TRUE(is_perfect_leafset(tree, z));
  }
}

TEST(PerfectLeafset, LargestIsPerfectOutsideTheGuarantee) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = rng.below(9);
    const std::size_t d = 1 + rng.below(3);
    const auto tree = testing::random_labels(rng, m, d);
    const auto best = largest_perfect_leafset(tree, m);
    EXPECT_EQ(best.leaves.size(), std::size_t{1} << best.height);
    EXPECT_TRUE(extracted_shape(tree, best.leaves)) << "trial " << trial;
  }
}

TEST(PerfectLeafset, AgreesWithPredicate) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto tree = testing::random_labels(rng, 3, 1);
    // Random 4-leaf subsets, perfect or not.
    std::vector<Leaf> all{0, 1, 2, 3, 4, 5, 6, 7};
    rng.shuffle(std::span<Leaf>(all));
    LeafSet z(all.begin(), all.begin() + 4);
    std::sort(z.begin(), z.end());
    EXPECT_EQ(is_perfect_leafset(tree, z), perfect_by_definition(tree, z));
  }
}

}  // namespace
}  // namespace monosub
