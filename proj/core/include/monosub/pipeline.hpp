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


// Row-monotone and monotone submatrix extraction.
//
// The row-monotone pipeline reads the columns as a vector sequence (after
// tie-breaking), extracts a binary-tree-like subsequence, a perfect leaf set
// with layered labels w_0 ... w_{h-1}, a monochromatic submatrix of the
// d x h matrix of those labels, and finally the leaves spanned by the chosen
// depths. The monotone pipeline first takes a canonical monotone
// subsequence of every column, groups columns by (direction, rows) and runs
// the row-monotone pipeline on the largest groups.
//
// The guaranteed parameter regime needs astronomically many columns, so
// best-effort mode is the normal one: it reports the largest k x k witness
// it certified together with the stage that limited k.

#ifndef MONOSUB_PIPELINE_HPP_
#define MONOSUB_PIPELINE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monosub/matrix.hpp"

namespace monosub {

enum class Mode : std::uint8_t { kGuaranteed, kBestEffort };

std::string_view to_string(Mode mode);

struct StageReport {
  std::string name;
  std::size_t value = 0;
  std::string detail;

  friend bool operator==(const StageReport&, const StageReport&) = default;
};

struct ExtractionOptions {
  Mode mode = Mode::kBestEffort;
  // Per-column monotone length for find_monotone. Defaults to 8 n^2 in
  // guaranteed mode and to min(8 n^2, floor(sqrt(d - 1)) + 1) otherwise.
  std::optional<std::size_t> ell;
  // Largest column groups tried by find_monotone.
  std::size_t max_groups = 16;
};

struct ExtractionResult {
  std::size_t target = 0;
  std::size_t achieved = 0;  // k of the witness
  std::optional<SubmatrixWitness> witness;
  bool guaranteed_regime = false;
  // Guaranteed mode outside its regime: nothing was run.
  bool refused = false;
  std::string message;
  std::vector<StageReport> stages;
  // First stage whose capacity fell below the target; empty on success.
  std::string bottleneck;

  bool success() const noexcept { return witness && achieved >= target; }
};

// Whether (d, N) meets d >= 8 n^2 and log2 N >= c n^4 log2(n)^2.
bool row_monotone_regime(std::size_t d, std::size_t cols, std::size_t n,
                         std::size_t c = 1000);
// Whether (d, N) meets d >= 64 n^4 and log2 N >= c0 n^4 log2(n)^2.
bool monotone_regime(std::size_t d, std::size_t cols, std::size_t n,
                     std::size_t c0 = 2000);

// Throws InvalidArgument for n == 0.
ExtractionResult find_row_monotone(const Matrix& m, std::size_t n,
                                   const ExtractionOptions& options = {});
ExtractionResult find_monotone(const Matrix& m, std::size_t n,
                               const ExtractionOptions& options = {});

}  // namespace monosub

#endif  // MONOSUB_PIPELINE_HPP_
