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

#ifndef MONOSUB_COLORING_HPP_
#define MONOSUB_COLORING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "monosub/matrix.hpp"

namespace monosub {

enum class Color : std::uint8_t { kRed, kBlue };

std::string_view to_string(Color color);

// Red/blue coloring of a rows x cols grid.
class ColoredMatrix {
 public:
  // All red.
  ColoredMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Color at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, Color color);

  friend bool operator==(const ColoredMatrix&, const ColoredMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Color> cells_;
};

// Red where the sign is '+', blue where it is '-'. Each entry of `columns`
// becomes one column.
ColoredMatrix color_sign_columns(const std::vector<SignVector>& columns);

struct MonochromaticSubmatrix {
  IndexList rows;
  IndexList cols;
  Color color = Color::kRed;

  friend bool operator==(const MonochromaticSubmatrix&,
                         const MonochromaticSubmatrix&) = default;
};

// n x s single-colored submatrix by the pigeonhole over column s-subsets.
//
// A color qualifies when at least ceil(d/2) rows hold at least ceil(t/2)
// entries of it; red is tried first. Qualifying rows are visited in order,
// each registering every s-subset of its same-colored columns
// (lexicographically) in a counting table, and the first subset registered
// by n rows is returned. Always succeeds when t >= 4 s^2 and d >= 4 n 2^s.
// Throws InvalidArgument for n == 0 or s == 0.
std::optional<MonochromaticSubmatrix> monochromatic_submatrix(
    const ColoredMatrix& cm, std::size_t n, std::size_t s);

}  // namespace monosub

#endif  // MONOSUB_COLORING_HPP_
