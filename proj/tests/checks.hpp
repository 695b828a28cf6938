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


// Exhaustive checks shared by the unit tests and the acceptance runner.
// Each returns a tally of examined cases and failures.

#ifndef MONOSUB_TESTS_CHECKS_HPP_
#define MONOSUB_TESTS_CHECKS_HPP_

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "monosub/rooted_tree.hpp"
#include "support.hpp"

namespace monosub::testing {

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;

  void check(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
  Tally& operator+=(const Tally& other) {
    cases += other.cases;
    failures += other.failures;
    return *this;
  }
};

inline LeafSet leaves_of_mask(std::uint64_t mask) {
  LeafSet out;
  for (Leaf i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

// Bit formula against explicit path walking, all pairs.
inline Tally check_leaf_ancestor(std::size_t m) {
  Tally tally;
  const Leaf count = Leaf{1} << m;
  std::vector<std::vector<Vertex>> paths(count);
  for (Leaf a = 0; a < count; ++a) paths[a] = path_to_root(m, a);
  for (Leaf a = 0; a < count; ++a) {
    for (Leaf b = 0; b < count; ++b) {
      const auto& pa = paths[a];
      const auto& pb = paths[b];
      std::size_t k = 0;
      while (k + 1 < pa.size() && pa[k + 1] == pb[k + 1]) ++k;
      tally.check(leaf_ancestor(m, a, b) == pa[k]);
    }
  }
  return tally;
}

// Leaf sets X, Y with unrelated roots: T[X u Y] is T[X] and T[Y] hung below
// the common ancestor of their roots.
inline Tally check_disjoint_union(std::size_t m) {
  Tally tally;
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << m);
  std::map<Vertex, std::vector<std::uint64_t>> by_root;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const LeafSet x = leaves_of_mask(mask);
    by_root[common_ancestor(m, x)].push_back(mask);
  }
  for (const auto& [rx, xs] : by_root) {
    for (const auto& [ry, ys] : by_root) {
      if (related(rx, ry) || !(rx < ry)) continue;
      const Vertex top = common_ancestor(rx, ry);
      for (std::uint64_t xm : xs) {
        const InducedTree tx = induced_subtree(m, leaves_of_mask(xm));
        for (std::uint64_t ym : ys) {
          const InducedTree ty = induced_subtree(m, leaves_of_mask(ym));
          const InducedTree joint = induced_subtree(m, leaves_of_mask(xm | ym));
          bool ok = joint.root() == top &&
                    joint.size() == tx.size() + ty.size() + 1;
          for (const InducedTree* part : {&tx, &ty}) {
            for (const Vertex& v : part->vertices()) {
              if (!ok) break;
              const auto expected = v == part->root() ? std::optional<Vertex>(top)
                                                      : part->parent(v);
              ok = joint.contains(v) && joint.parent(v) == expected;
            }
          }
          tally.check(ok);
        }
      }
    }
  }
  return tally;
}

// A entirely below B: the roots of T[A] and T[B] differ.
inline Tally check_ordered_roots(std::size_t m) {
  Tally tally;
  const std::uint64_t leaves = std::uint64_t{1} << m;
  const std::uint64_t count = std::uint64_t{1} << leaves;
  std::vector<Vertex> roots(count);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    roots[mask] = induced_subtree(m, leaves_of_mask(mask)).root();
  }
  for (std::uint64_t am = 1; am < count; ++am) {
    const std::uint64_t above = std::bit_width(am);
    for (std::uint64_t bm = 1; bm < (std::uint64_t{1} << (leaves - above)); ++bm) {
      tally.check(roots[bm << above] != roots[am]);
    }
  }
  return tally;
}

// Every depth set Z: |Q| = 2^|Z|, T[Q] perfect of height |Z|, non-leaf
// vertices exactly at depths in Z, vertex set equal to the pairwise
// ancestors.
inline Tally check_levels(std::size_t m) {
  Tally tally;
  for (std::uint64_t zm = 0; zm < (std::uint64_t{1} << m); ++zm) {
    std::vector<std::size_t> z;
    for (std::size_t k = 0; k < m; ++k) {
      if ((zm >> k) & 1U) z.push_back(k);
    }
    const LeafSet q = levels_leafset(m, z);
    const InducedTree tree = induced_subtree(m, q);
    bool ok = q.size() == (std::size_t{1} << z.size()) &&
              tree.perfect_height() == z.size();
    std::set<std::size_t> depths;
    for (const Vertex& v : tree.vertices()) {
      if (v.depth < m) depths.insert(v.depth);
    }
    ok = ok && depths == std::set<std::size_t>(z.begin(), z.end());
    const auto oracle = pairwise_ancestors(m, q);
    ok = ok && std::vector<Vertex>(oracle.begin(), oracle.end()) == tree.vertices();
    tally.check(ok);
  }
  return tally;
}

// (T[X])[Y] = T[Y] for every Y inside X.
inline Tally check_restriction(std::size_t m) {
  Tally tally;
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << m);
  for (std::uint64_t xm = 1; xm < count; ++xm) {
    const InducedTree tx = induced_subtree(m, leaves_of_mask(xm));
    // Walk the non-empty submasks of xm.
    for (std::uint64_t ym = xm; ym != 0; ym = (ym - 1) & xm) {
      const LeafSet y = leaves_of_mask(ym);
      std::vector<Vertex> gens;
      for (Leaf leaf : y) gens.push_back(Vertex{m, leaf});
      tally.check(tx.restricted_to(gens) == induced_subtree(m, y));
    }
  }
  return tally;
}

}  // namespace monosub::testing

#endif  // MONOSUB_TESTS_CHECKS_HPP_
