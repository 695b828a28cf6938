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

#include "monosub/coloring.hpp"

#include <map>

namespace monosub {

std::string_view to_string(Color color) {
  return color == Color::kRed ? "red" : "blue";
}

ColoredMatrix::ColoredMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, Color::kRed) {}

Color ColoredMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw IndexOutOfBounds("colored matrix index out of bounds");
  }
  return cells_[row * cols_ + col];
}

void ColoredMatrix::set(std::size_t row, std::size_t col, Color color) {
  if (row >= rows_ || col >= cols_) {
    throw IndexOutOfBounds("colored matrix index out of bounds");
  }
  cells_[row * cols_ + col] = color;
}

ColoredMatrix color_sign_columns(const std::vector<SignVector>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  ColoredMatrix cm(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw LengthMismatch("sign columns of different length");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      cm.set(r, c, columns[c][r] == Sign::kPlus ? Color::kRed : Color::kBlue);
    }
  }
  return cm;
}

namespace {

// Visits the k-subsets of `items` in lexicographic order until `visit`
// returns true. Returns whether it stopped early.
template <typename Visit>
bool for_each_subset(const IndexList& items, std::size_t k, Visit&& visit) {
  if (k > items.size()) return false;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  IndexList subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[pick[i]];
    if (visit(subset)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == items.size() - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::optional<MonochromaticSubmatrix> monochromatic_submatrix(
    const ColoredMatrix& cm, std::size_t n, std::size_t s) {
  if (n == 0 || s == 0) {
    throw InvalidArgument("monochromatic submatrix needs n >= 1 and s >= 1");
  }
  const std::size_t min_entries = (cm.cols() + 1) / 2;
  const std::size_t min_rows = (cm.rows() + 1) / 2;

  for (Color color : {Color::kRed, Color::kBlue}) {
    std::vector<IndexList> colored_cols(cm.rows());
    IndexList qualifying;
    for (std::size_t r = 0; r < cm.rows(); ++r) {
      for (std::size_t c = 0; c < cm.cols(); ++c) {
        if (cm.at(r, c) == color) colored_cols[r].push_back(c);
      }
      if (colored_cols[r].size() >= min_entries) qualifying.push_back(r);
    }
    if (qualifying.size() < min_rows || qualifying.empty()) continue;

    std::map<IndexList, IndexList> table;
    std::optional<MonochromaticSubmatrix> found;
    for (std::size_t r : qualifying) {
      const bool done = for_each_subset(
          colored_cols[r], s, [&](const IndexList& subset) {
            IndexList& rows = table[subset];
            rows.push_back(r);
            if (rows.size() < n) return false;
            found = MonochromaticSubmatrix{rows, subset, color};
            return true;
          });
      if (done) return found;
    }
  }
  return std::nullopt;
}

}  // namespace monosub
