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

// Dense exact matrices, sign vectors and the monotonicity predicates every
// other module validates against.
//
// Indices are zero-based throughout the library. Monotone always means weak
// (non-strict); a constant row counts as increasing.

#ifndef MONOSUB_MATRIX_HPP_
#define MONOSUB_MATRIX_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monosub/error.hpp"

namespace monosub {

// Matrix entries are exact rationals; integer inputs are the common case.
using Value = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using IndexList = std::vector<std::size_t>;

enum class Direction : std::uint8_t { kIncreasing, kDecreasing };

std::string_view to_string(Direction direction);

enum class Sign : std::int8_t { kMinus = -1, kPlus = 1 };

constexpr Sign negate(Sign s) {
  return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus;
}

// An element of {-,+}^d.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<Sign> signs) : signs_(std::move(signs)) {}
  SignVector(std::size_t size, Sign fill) : signs_(size, fill) {}

  // Parses a string over {'+', '-'}; throws ParseError otherwise.
  static SignVector parse(std::string_view text);

  std::size_t size() const noexcept { return signs_.size(); }
  Sign operator[](std::size_t i) const { return signs_[i]; }
  Sign& operator[](std::size_t i) { return signs_[i]; }
  std::span<const Sign> signs() const noexcept { return signs_; }

  SignVector negated() const;
  bool is_constant(Sign s) const;

  // "+-+" style rendering.
  std::string to_string() const;

  friend auto operator<=>(const SignVector&, const SignVector&) = default;
  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<Sign> signs_;
};

// Coordinatewise sign of w - v. Throws TiedCoordinate on the first equal
// coordinate and LengthMismatch if the lengths differ.
template <typename T>
SignVector sign_diff(std::span<const T> v, std::span<const T> w) {
  if (v.size() != w.size()) {
    throw LengthMismatch("sign_diff: vectors of different length");
  }
  std::vector<Sign> out(v.size());
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a] == w[a]) throw TiedCoordinate(a);
    out[a] = w[a] > v[a] ? Sign::kPlus : Sign::kMinus;
  }
  return SignVector(std::move(out));
}

inline SignVector sign_diff(const std::vector<Value>& v,
                            const std::vector<Value>& w) {
  return sign_diff(std::span<const Value>(v), std::span<const Value>(w));
}

// Row-major d x N matrix of exact values; d >= 1 and N >= 1.
class Matrix {
 public:
  // Throws InvalidArgument when either dimension is zero or the entry count
  // does not match.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Value> entries);
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix from_rows(const std::vector<std::vector<Value>>& rows);
  static Matrix from_rows(
      std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Value& at(std::size_t row, std::size_t col) const;
  Value& at(std::size_t row, std::size_t col);

  // Unchecked access for hot loops.
  const Value& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * cols_ + col];
  }

  std::span<const Value> row(std::size_t r) const;
  std::vector<Value> column(std::size_t c) const;
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> entries_;
};

// Direction shared by every row, or nothing. Constant rows are compatible
// with both directions; an all-constant matrix reports increasing.
std::optional<Direction> is_row_monotone(const Matrix& m);

struct MonotoneDirections {
  Direction rows;
  Direction columns;
  friend bool operator==(const MonotoneDirections&,
                         const MonotoneDirections&) = default;
};

std::optional<MonotoneDirections> is_monotone(const Matrix& m);

// Whether every row of `m` (or every column, for columns_satisfy) is weakly
// monotone in `direction`.
bool rows_satisfy(const Matrix& m, Direction direction);
bool columns_satisfy(const Matrix& m, Direction direction);

// Induced submatrix. Indices must be strictly increasing and in bounds.
Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows,
                 std::span<const std::size_t> cols);

// Compares (entry(row, i), i) with (entry(row, j), j). This is the symbolic
// perturbation that makes all comparisons within a row strict.
std::strong_ordering tie_break_compare(const Matrix& m, std::size_t row,
                                       std::size_t i, std::size_t j);

// For each row, the rank (0..N-1) of every column under tie_break_compare.
// The result is row-major like the matrix; ranks in a row are a permutation.
std::vector<std::int64_t> tie_break_row_ranks(const Matrix& m);

// Ranks of a plain value sequence under (value, index) comparison.
std::vector<std::int64_t> tie_break_ranks(std::span<const Value> values);

// A certified (row-)monotone submatrix. `column_direction` is present only
// for fully monotone witnesses.
struct SubmatrixWitness {
  IndexList rows;
  IndexList cols;
  Direction row_direction = Direction::kIncreasing;
  std::optional<Direction> column_direction;

  bool is_full() const noexcept { return column_direction.has_value(); }
  // "row-increasing", "row-decreasing" or "monotone".
  std::string kind() const;

  friend bool operator==(const SubmatrixWitness&,
                         const SubmatrixWitness&) = default;
};

// True iff the witness indices are valid for `m` and the induced submatrix
// satisfies the claimed directions under weak comparison.
bool satisfies(const Matrix& m, const SubmatrixWitness& witness);

// Parameter set of the row-monotone extraction pipeline.
struct PipelineParams {
  std::size_t n = 1;      // target size
  std::size_t d = 8;      // row budget, 8n^2
  std::size_t s = 0;      // ceil(log2 n)
  std::size_t t = 0;      // 4 s^2
  std::size_t m = 0;      // 2 d t
  std::size_t ell = 8;    // 8 n^2, the per-column monotone length
  std::size_t c = 1000;   // column-count exponent constant
  std::size_t c0 = 2000;  // 2c, for fully monotone extraction

  static PipelineParams derive(std::size_t n);

  // Whether the derived relations hold (s = ceil(log2 n), t = 4s^2, ...).
  bool is_derived() const;
  bool is_positive() const;

  // Base-2 logarithm of the column count that guarantees success: c * n^4 *
  // log2(n)^2, rounded up. Returned as a double since it overflows any
  // practical integer column count for n >= 2.
  double required_log2_columns() const;
};

// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::size_t n);

}  // namespace monosub

#endif  // MONOSUB_MATRIX_HPP_
