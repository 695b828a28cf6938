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


#include "monosub/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "monosub/coloring.hpp"
#include "monosub/erdos_szekeres.hpp"
#include "monosub/perfect_leafset.hpp"
#include "monosub/rooted_tree.hpp"
#include "monosub/sequence.hpp"

namespace monosub {

std::string_view to_string(Mode mode) {
  return mode == Mode::kGuaranteed ? "guaranteed" : "best-effort";
}

namespace {

// Tree heights are kept small enough for LabeledBinaryTree.
constexpr std::size_t kMaxPipelineHeight = 30;

double required_log2(std::size_t n, std::size_t c) {
  const double nn = static_cast<double>(n);
  const double lg = std::log2(nn);
  return std::ceil(static_cast<double>(c) * nn * nn * nn * nn * lg * lg);
}

std::size_t floor_log2(std::size_t n) {
  std::size_t out = 0;
  while ((n >>= 1) != 0) ++out;
  return out;
}

// Indices are shown one-based unless `base` says otherwise; depths stay
// zero-based.
std::string join(const IndexList& values, std::size_t base = 1) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << values[i] + base;
  }
  return out.str();
}

SubmatrixWitness single_entry(bool full) {
  SubmatrixWitness w{{0}, {0}, Direction::kIncreasing, std::nullopt};
  if (full) w.column_direction = Direction::kIncreasing;
  return w;
}

// The row-monotone pipeline without the regime check.
ExtractionResult row_monotone_core(const Matrix& m, std::size_t n) {
  ExtractionResult result;
  result.target = n;
  const IndexedSequence seq = IndexedSequence::from_columns(m);
  result.stages.push_back(
      {"tie-break", m.cols(), "columns ranked by (value, index) in every row"});

  const std::size_t max_height =
      std::min(floor_log2(m.cols()), kMaxPipelineHeight);
  const TreeLikeCertificate cert =
      largest_tree_like_subsequence(seq, max_height);
  const std::size_t tree_height = cert.tree.height();
  result.stages.push_back({"tree-like", tree_height,
                           std::to_string(std::size_t{1} << tree_height) +
                               " columns in a binary-tree-like subsequence"});

  const PerfectLeafset perfect = largest_perfect_leafset(cert.tree, tree_height);
  const std::size_t h = perfect.height;
  result.stages.push_back({"perfect", h,
                           std::to_string(perfect.leaves.size()) +
                               " leaves with layered labels"});

  const auto layered =
      is_layered(cert.tree, induced_subtree(tree_height, perfect.leaves));
  if (!layered) throw std::logic_error("perfect leaf set is not layered");
  std::string labels;
  for (const auto& w : *layered) labels += (labels.empty() ? "" : " ") + w.to_string();
  result.stages.push_back({"layered", h, labels.empty() ? "none" : labels});

  // Column j of the label matrix is the label of induced depth h-1-j, so the
  // lexicographically first columns are the deepest levels.
  std::vector<SignVector> columns;
  for (std::size_t j = 0; j < h; ++j) columns.push_back((*layered)[h - 1 - j]);
  const ColoredMatrix cm = color_sign_columns(columns);

  const std::size_t cap = std::min({n, m.rows(), perfect.leaves.size()});
  for (std::size_t k = cap; k >= 2; --k) {
    const std::size_t s = ceil_log2(k);
    const auto mono = monochromatic_submatrix(cm, k, s);
    if (!mono) continue;
    IndexList depths;
    for (std::size_t j : mono->cols) depths.push_back(h - 1 - j);
    std::sort(depths.begin(), depths.end());
    result.stages.push_back(
        {"monochromatic", k,
         std::string(to_string(mono->color)) + " on rows " + join(mono->rows) +
             " at depths " + join(depths, 0)});

    const LeafSet q = levels_leafset(h, depths);
    IndexList cols;
    for (std::size_t i = 0; i < k; ++i) {
      cols.push_back(cert.subsequence.tag(perfect.leaves[q[i]]));
    }
    result.stages.push_back({"levels", k, "columns " + join(cols)});
    result.witness = SubmatrixWitness{
        mono->rows, std::move(cols),
        mono->color == Color::kRed ? Direction::kIncreasing
                                   : Direction::kDecreasing,
        std::nullopt};
    result.achieved = k;
    break;
  }
  if (!result.witness) {
    result.stages.push_back({"monochromatic", 1, "single entry"});
    result.witness = single_entry(false);
    result.achieved = 1;
  }
  if (!satisfies(m, *result.witness)) {
    throw std::logic_error("row-monotone pipeline emitted an invalid witness");
  }

  if (result.achieved < n) {
    if (m.rows() < n) {
      result.bottleneck = "rows";
    } else if ((std::size_t{1} << tree_height) < n) {
      result.bottleneck = "tree-like";
    } else if (perfect.leaves.size() < n) {
      result.bottleneck = "perfect";
    } else {
      result.bottleneck = "monochromatic";
    }
  }
  return result;
}

std::string refusal(std::string_view what, std::size_t min_rows,
                    std::size_t cols_exponent_c, std::size_t n) {
  std::ostringstream out;
  out << "guaranteed " << what << " extraction needs d >= " << min_rows
      << " and N >= 2^" << static_cast<std::uint64_t>(required_log2(n, cols_exponent_c));
  return out.str();
}

void describe(ExtractionResult& result, Mode mode) {
  std::ostringstream out;
  out << to_string(mode) << ": " << result.achieved << "x" << result.achieved
      << " witness for target " << result.target;
  if (!result.bottleneck.empty()) out << ", limited by " << result.bottleneck;
  result.message = out.str();
}

}  // namespace

bool row_monotone_regime(std::size_t d, std::size_t cols, std::size_t n,
                         std::size_t c) {
  const double nn = static_cast<double>(n);
  return static_cast<double>(d) >= 8 * nn * nn &&
         std::log2(static_cast<double>(cols)) >= required_log2(n, c);
}

bool monotone_regime(std::size_t d, std::size_t cols, std::size_t n,
                     std::size_t c0) {
  const double nn = static_cast<double>(n);
  return static_cast<double>(d) >= 64 * nn * nn * nn * nn &&
         std::log2(static_cast<double>(cols)) >= required_log2(n, c0);
}

ExtractionResult find_row_monotone(const Matrix& m, std::size_t n,
                                   const ExtractionOptions& options) {
  if (n == 0) throw InvalidArgument("target size must be positive");
  const bool regime = row_monotone_regime(m.rows(), m.cols(), n);
  if (options.mode == Mode::kGuaranteed && !regime) {
    ExtractionResult refused;
    refused.target = n;
    refused.refused = true;
    refused.message = refusal("row-monotone", 8 * n * n, 1000, n);
    return refused;
  }
  ExtractionResult result = row_monotone_core(m, n);
  result.guaranteed_regime = regime;
  describe(result, options.mode);
  return result;
}

ExtractionResult find_monotone(const Matrix& m, std::size_t n,
                               const ExtractionOptions& options) {
  if (n == 0) throw InvalidArgument("target size must be positive");
  const bool regime = monotone_regime(m.rows(), m.cols(), n);
  if (options.mode == Mode::kGuaranteed && !regime) {
    ExtractionResult refused;
    refused.target = n;
    refused.refused = true;
    refused.message = refusal("monotone", 64 * n * n * n * n, 2000, n);
    return refused;
  }

  std::size_t ell = 8 * n * n;
  if (options.ell) {
    ell = *options.ell;
  } else if (options.mode == Mode::kBestEffort) {
    const auto root = static_cast<std::size_t>(
        std::floor(std::sqrt(static_cast<double>(m.rows() - 1))));
    ell = std::min(ell, root + 1);
  }
  if (ell == 0) throw InvalidArgument("per-column length must be positive");

  ExtractionResult result;
  result.target = n;
  result.guaranteed_regime = regime;

  using Key = std::pair<Direction, IndexList>;
  std::map<Key, IndexList> groups;
  std::size_t with_run = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const std::vector<Value> column = m.column(c);
    auto run = monotone_subsequence_1d(std::span<const Value>(column), ell);
    if (!run) continue;
    ++with_run;
    groups[{run->direction, std::move(run->indices)}].push_back(c);
  }
  result.stages.push_back({"columns", with_run,
                           "columns with a monotone run of length " +
                               std::to_string(ell)});

  std::vector<const std::pair<const Key, IndexList>*> order;
  for (const auto& entry : groups) order.push_back(&entry);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return a->second.size() > b->second.size();
  });
  result.stages.push_back(
      {"grouping", order.empty() ? 0 : order.front()->second.size(),
       std::to_string(groups.size()) + " (direction, rows) classes"});

  const std::vector<StageReport> base = result.stages;
  const std::size_t tries = std::min(order.size(), options.max_groups);
  for (std::size_t g = 0; g < tries && result.achieved < n; ++g) {
    const auto& [key, cols] = *order[g];
    const IndexList& rows = key.second;
    ExtractionResult inner = row_monotone_core(submatrix(m, rows, cols), n);
    if (inner.achieved <= result.achieved) continue;
    SubmatrixWitness w = *inner.witness;
    for (auto& r : w.rows) r = rows[r];
    for (auto& c : w.cols) c = cols[c];
    w.column_direction = key.first;
    result.witness = std::move(w);
    result.achieved = inner.achieved;
    result.bottleneck = inner.bottleneck;
    result.stages = base;
    result.stages.back().detail += ", class " + std::to_string(g + 1) + " used";
    result.stages.insert(result.stages.end(), inner.stages.begin(),
                         inner.stages.end());
  }
  if (!result.witness) {
    result.witness = single_entry(true);
    result.achieved = 1;
    result.stages.push_back({"monochromatic", 1, "single entry"});
    if (n > 1) result.bottleneck = "columns";
  }
  if (!satisfies(m, *result.witness)) {
    throw std::logic_error("monotone pipeline emitted an invalid witness");
  }
  describe(result, options.mode);
  return result;
}

}  // namespace monosub
