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


// Brute-force searchers used as ground truth, and the classical extremal
// sequence without long monotone subsequences.

#ifndef MONOSUB_ORACLE_HPP_
#define MONOSUB_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "monosub/coloring.hpp"
#include "monosub/matrix.hpp"

namespace monosub {

struct SearchBudget {
  // Row subsets examined.
  std::uint64_t max_row_subsets = 10'000'000;
  // Column subsets (partial ones included) examined over the whole search.
  std::uint64_t max_col_subsets = 10'000'000;
  // Lexicographic order over index subsets; false walks the reverse order.
  bool lexicographic = true;
};

// First n x n submatrix whose rows are all weakly increasing or all weakly
// decreasing, enumerating row subsets and then column subsets. Absent means
// the whole space was covered. Throws BudgetExceeded when the budget runs
// out before a find, and InvalidArgument for n == 0.
std::optional<SubmatrixWitness> brute_force_row_monotone(
    const Matrix& m, std::size_t n, const SearchBudget& budget = {});

// Same for fully monotone n x n submatrices.
std::optional<SubmatrixWitness> brute_force_monotone(
    const Matrix& m, std::size_t n, const SearchBudget& budget = {});

// First s-subset of columns (then red before blue) on which at least n rows
// are single-colored; the first n such rows are returned.
std::optional<MonochromaticSubmatrix> brute_force_monochromatic(
    const ColoredMatrix& cm, std::size_t n, std::size_t s,
    const SearchBudget& budget = {});

// n-1 descending blocks of n-1 consecutive values, increasing from block to
// block: (2, 1, 4, 3) for n = 3. No monotone subsequence has length n.
std::vector<std::int64_t> es_extremal_sequence(std::size_t n);

}  // namespace monosub

#endif  // MONOSUB_ORACLE_HPP_
