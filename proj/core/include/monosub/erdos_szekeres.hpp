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


// Canonical monotone subsequences of a one-dimensional sequence.
//
// Comparisons are strict under the (value, index) tie-break, so a returned
// increasing subsequence is weakly increasing in the original values.

#ifndef MONOSUB_ERDOS_SZEKERES_HPP_
#define MONOSUB_ERDOS_SZEKERES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monosub/matrix.hpp"

namespace monosub {

struct MonotoneRun {
  IndexList indices;
  Direction direction = Direction::kIncreasing;

  friend bool operator==(const MonotoneRun&, const MonotoneRun&) = default;
};

// Length-n monotone subsequence, increasing preferred.
//
// Among all increasing index sets of length n the lexicographically smallest
// is returned; only when none exists are decreasing ones considered, with
// the same rule. Present whenever the sequence has at least (n-1)^2 + 1
// elements. n == 0 yields an empty increasing run.
std::optional<MonotoneRun> monotone_subsequence_1d(std::span<const Value> seq,
                                                   std::size_t n);
std::optional<MonotoneRun> monotone_subsequence_1d(
    std::span<const std::int64_t> seq, std::size_t n);

// Length of the longest strictly increasing subsequence of distinct ranks.
std::size_t longest_increasing_length(std::span<const std::int64_t> ranks);

}  // namespace monosub

#endif  // MONOSUB_ERDOS_SZEKERES_HPP_
