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

#include "monosub/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace monosub {

std::string_view to_string(Direction direction) {
  return direction == Direction::kIncreasing ? "increasing" : "decreasing";
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (char ch : text) {
    if (ch == '+') {
      signs.push_back(Sign::kPlus);
    } else if (ch == '-') {
      signs.push_back(Sign::kMinus);
    } else {
      throw ParseError("sign vector: unexpected character '" +
                       std::string(1, ch) + "'");
    }
  }
  return SignVector(std::move(signs));
}

SignVector SignVector::negated() const {
  std::vector<Sign> out(signs_.size());
  std::transform(signs_.begin(), signs_.end(), out.begin(), negate);
  return SignVector(std::move(out));
}

bool SignVector::is_constant(Sign s) const {
  return std::all_of(signs_.begin(), signs_.end(),
                     [s](Sign x) { return x == s; });
}

std::string SignVector::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out.push_back(s == Sign::kPlus ? '+' : '-');
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw InvalidArgument("matrix dimensions must be positive");
  }
  if (entries_.size() != rows_ * cols_) {
    throw InvalidArgument("matrix entry count does not match dimensions");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : Matrix(rows, cols, std::vector<Value>(rows * cols)) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Value>>& rows) {
  if (rows.empty()) throw InvalidArgument("matrix needs at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<Value> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidArgument("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(entries));
}

Matrix Matrix::from_rows(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<Value>> converted;
  for (const auto& r : rows) {
    converted.emplace_back(r.begin(), r.end());
  }
  return from_rows(converted);
}

const Value& Matrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw IndexOutOfBounds("matrix index (" + std::to_string(row) + ", " +
                           std::to_string(col) + ") out of bounds");
  }
  return entries_[row * cols_ + col];
}

Value& Matrix::at(std::size_t row, std::size_t col) {
  return const_cast<Value&>(std::as_const(*this).at(row, col));
}

std::span<const Value> Matrix::row(std::size_t r) const {
  if (r >= rows_) throw IndexOutOfBounds("row out of bounds");
  return std::span<const Value>(entries_).subspan(r * cols_, cols_);
}

std::vector<Value> Matrix::column(std::size_t c) const {
  if (c >= cols_) throw IndexOutOfBounds("column out of bounds");
  std::vector<Value> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::transposed() const {
  std::vector<Value> out;
  out.reserve(entries_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  }
  return Matrix(cols_, rows_, std::move(out));
}

namespace {

bool row_is(const Matrix& m, std::size_t r, Direction direction) {
  for (std::size_t c = 1; c < m.cols(); ++c) {
    const Value& prev = m(r, c - 1);
    const Value& cur = m(r, c);
    if (direction == Direction::kIncreasing ? cur < prev : cur > prev) {
      return false;
    }
  }
  return true;
}

void check_strictly_sorted(std::span<const std::size_t> indices,
                           std::size_t bound, const char* what) {
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= bound) {
      throw IndexOutOfBounds(std::string(what) + " index " +
                             std::to_string(indices[k]) + " out of bounds");
    }
    if (k > 0 && indices[k] <= indices[k - 1]) {
      throw InvalidArgument(std::string(what) +
                            " indices must be strictly increasing");
    }
  }
}

}  // namespace

bool rows_satisfy(const Matrix& m, Direction direction) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!row_is(m, r, direction)) return false;
  }
  return true;
}

bool columns_satisfy(const Matrix& m, Direction direction) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 1; r < m.rows(); ++r) {
      const Value& prev = m(r - 1, c);
      const Value& cur = m(r, c);
      if (direction == Direction::kIncreasing ? cur < prev : cur > prev) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Direction> is_row_monotone(const Matrix& m) {
  if (rows_satisfy(m, Direction::kIncreasing)) return Direction::kIncreasing;
  if (rows_satisfy(m, Direction::kDecreasing)) return Direction::kDecreasing;
  return std::nullopt;
}

std::optional<MonotoneDirections> is_monotone(const Matrix& m) {
  auto rows = is_row_monotone(m);
  if (!rows) return std::nullopt;
  std::optional<Direction> cols;
  if (columns_satisfy(m, Direction::kIncreasing)) {
    cols = Direction::kIncreasing;
  } else if (columns_satisfy(m, Direction::kDecreasing)) {
    cols = Direction::kDecreasing;
  } else {
    return std::nullopt;
  }
  return MonotoneDirections{*rows, *cols};
}

Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows,
                 std::span<const std::size_t> cols) {
  check_strictly_sorted(rows, m.rows(), "row");
  check_strictly_sorted(cols, m.cols(), "column");
  std::vector<Value> out;
  out.reserve(rows.size() * cols.size());
  for (std::size_t r : rows) {
    for (std::size_t c : cols) out.push_back(m(r, c));
  }
  return Matrix(rows.size(), cols.size(), std::move(out));
}

std::strong_ordering tie_break_compare(const Matrix& m, std::size_t row,
                                       std::size_t i, std::size_t j) {
  const Value& x = m.at(row, i);
  const Value& y = m.at(row, j);
  if (x < y) return std::strong_ordering::less;
  if (y < x) return std::strong_ordering::greater;
  return i <=> j;
}

std::vector<std::int64_t> tie_break_ranks(std::span<const Value> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // stable_sort on values alone is exactly (value, index) order.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] < values[b];
                   });
  std::vector<std::int64_t> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranks[order[r]] = static_cast<std::int64_t>(r);
  }
  return ranks;
}

std::vector<std::int64_t> tie_break_row_ranks(const Matrix& m) {
  std::vector<std::int64_t> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto ranks = tie_break_ranks(m.row(r));
    out.insert(out.end(), ranks.begin(), ranks.end());
  }
  return out;
}

std::string SubmatrixWitness::kind() const {
  if (column_direction) return "monotone";
  return row_direction == Direction::kIncreasing ? "row-increasing"
                                                 : "row-decreasing";
}

bool satisfies(const Matrix& m, const SubmatrixWitness& witness) {
  if (witness.rows.empty() || witness.cols.empty()) return false;
  auto valid = [](const IndexList& idx, std::size_t bound) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= bound || (k > 0 && idx[k] <= idx[k - 1])) return false;
    }
    return true;
  };
  if (!valid(witness.rows, m.rows()) || !valid(witness.cols, m.cols())) {
    return false;
  }
  const Matrix sub = submatrix(m, witness.rows, witness.cols);
  if (!rows_satisfy(sub, witness.row_direction)) return false;
  return !witness.column_direction ||
         columns_satisfy(sub, *witness.column_direction);
}

std::size_t ceil_log2(std::size_t n) {
  if (n == 0) throw InvalidArgument("ceil_log2 of zero");
  std::size_t s = 0;
  while ((std::size_t{1} << s) < n) ++s;
  return s;
}

PipelineParams PipelineParams::derive(std::size_t n) {
  if (n == 0) throw InvalidArgument("target size n must be positive");
  PipelineParams p;
  p.n = n;
  p.d = 8 * n * n;
  p.s = ceil_log2(n);
  p.t = 4 * p.s * p.s;
  p.m = 2 * p.d * p.t;
  p.ell = 8 * n * n;
  p.c = 1000;
  p.c0 = 2 * p.c;
  return p;
}

bool PipelineParams::is_derived() const {
  if (n == 0) return false;
  const PipelineParams expected = derive(n);
  return d == expected.d && s == expected.s && t == expected.t &&
         m == expected.m && ell == expected.ell && c0 == 2 * c;
}

bool PipelineParams::is_positive() const {
  return n > 0 && d > 0 && ell > 0 && c > 0 && c0 > 0;
}

double PipelineParams::required_log2_columns() const {
  const double nn = static_cast<double>(n);
  const double lg = std::log2(nn);
  return std::ceil(static_cast<double>(c) * nn * nn * nn * nn * lg * lg);
}

}  // namespace monosub
