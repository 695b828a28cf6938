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

#include <sstream>

#include "monosub/matrix.hpp"
#include "monosub/matrix_io.hpp"
#include "support.hpp"

namespace monosub {
namespace {

using V = std::vector<Value>;

TEST(SignDiff, MixedSigns) {
  EXPECT_EQ(sign_diff(V{3, 6, 3}, V{4, 5, 4}), SignVector::parse("+-+"));
  EXPECT_EQ(sign_diff(V{1, 8, 1}, V{5, 1, 6}), SignVector::parse("+-+"));
}

TEST(SignDiff, TieReportsCoordinate) {
  try {
    sign_diff(V{1}, V{1});
    FAIL() << "expected TiedCoordinate";
  } catch (const TiedCoordinate& e) {
    EXPECT_EQ(e.coordinate(), 0U);
  }
  try {
    sign_diff(V{1, 2, 3}, V{2, 3, 3});
    FAIL() << "expected TiedCoordinate";
  } catch (const TiedCoordinate& e) {
    EXPECT_EQ(e.coordinate(), 2U);
  }
}

TEST(SignDiff, LengthMismatch) {
  EXPECT_THROW(sign_diff(V{1, 2}, V{3}), LengthMismatch);
}

TEST(SignDiff, Antisymmetric) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 1 + rng.below(6);
    V v(d), w(d);
    for (std::size_t a = 0; a < d; ++a) {
      v[a] = rng.between(-20, 20);
      do {
        w[a] = rng.between(-20, 20);
      } while (w[a] == v[a]);
    }
    EXPECT_EQ(sign_diff(v, w), sign_diff(w, v).negated());
  }
}

TEST(SignVectorText, RoundTrip) {
  const SignVector s = SignVector::parse("+--+");
  EXPECT_EQ(s.size(), 4U);
  EXPECT_EQ(s.to_string(), "+--+");
  EXPECT_EQ(s.negated().to_string(), "-++-");
  EXPECT_TRUE(SignVector::parse("+++").is_constant(Sign::kPlus));
  EXPECT_THROW(SignVector::parse("+x"), ParseError);
}

TEST(RowMonotone, Examples) {
  EXPECT_EQ(is_row_monotone(Matrix::from_rows({{1, 2}, {3, 4}})),
            Direction::kIncreasing);
  EXPECT_EQ(is_row_monotone(Matrix::from_rows({{1, 2}, {5, 3}})), std::nullopt);
  EXPECT_EQ(is_row_monotone(Matrix::from_rows({{7}})), Direction::kIncreasing);
  EXPECT_EQ(is_row_monotone(Matrix::from_rows({{3, 2, 2}, {9, 1, 0}})),
            Direction::kDecreasing);
}

TEST(RowMonotone, ConstantRowsFitBothDirections) {
  EXPECT_EQ(is_row_monotone(Matrix::from_rows({{5, 5}, {4, 1}})),
            Direction::kDecreasing);
  EXPECT_EQ(is_row_monotone(Matrix::from_rows({{5, 5}, {5, 5}})),
            Direction::kIncreasing);
}

TEST(Monotone, Examples) {
  EXPECT_EQ(is_monotone(Matrix::from_rows({{1, 2}, {3, 4}})),
            (MonotoneDirections{Direction::kIncreasing, Direction::kIncreasing}));
  EXPECT_EQ(is_monotone(Matrix::from_rows({{4, 3}, {2, 1}})),
            (MonotoneDirections{Direction::kDecreasing, Direction::kDecreasing}));
  EXPECT_EQ(is_monotone(Matrix::from_rows({{1, 2}, {4, 3}})), std::nullopt);
  EXPECT_EQ(is_monotone(Matrix::from_rows({{3, 4}, {1, 2}})),
            (MonotoneDirections{Direction::kIncreasing, Direction::kDecreasing}));
}

TEST(Submatrix, Examples) {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  const IndexList all_rows{0, 1};
  const IndexList all_cols{0, 1, 2};
  EXPECT_EQ(submatrix(m, all_rows, all_cols), m);
  const IndexList row{1};
  const IndexList cols{0, 2};
  EXPECT_EQ(submatrix(m, row, cols), Matrix::from_rows({{4, 6}}));
  const IndexList bad{8};
  EXPECT_THROW(submatrix(m, bad, cols), IndexOutOfBounds);
  const IndexList unsorted{2, 0};
  EXPECT_THROW(submatrix(m, row, unsorted), InvalidArgument);
}

TEST(MatrixShape, RejectsEmptyAndChecksAccess) {
  EXPECT_THROW(Matrix(0, 3), InvalidArgument);
  EXPECT_THROW(Matrix(2, 0), InvalidArgument);
  EXPECT_THROW(Matrix(2, 2, V{1, 2, 3}), InvalidArgument);
  const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  EXPECT_THROW((void)m.at(2, 0), IndexOutOfBounds);
  EXPECT_EQ(m.at(1, 0), 3);
  EXPECT_EQ(m.transposed(), Matrix::from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(m.column(1), (V{2, 4}));
}

TEST(TieBreak, Examples) {
  const Matrix m = Matrix::from_rows({{3, 3, 3, 4, 3, 3}});
  EXPECT_EQ(tie_break_compare(m, 0, 1, 4), std::strong_ordering::less);
  EXPECT_EQ(tie_break_compare(m, 0, 4, 1), std::strong_ordering::greater);
  EXPECT_EQ(tie_break_compare(m, 0, 0, 3), std::strong_ordering::less);
  const Matrix n = Matrix::from_rows({{4, 3}});
  EXPECT_EQ(tie_break_compare(n, 0, 0, 1), std::strong_ordering::greater);
}

TEST(TieBreak, StrictTotalOrderMatchingValues) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = testing::random_matrix(rng, 3, 9, 0, 4);
    for (std::size_t a = 0; a < m.rows(); ++a) {
      for (std::size_t i = 0; i < m.cols(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (i == j) continue;
          const auto ij = tie_break_compare(m, a, i, j);
          EXPECT_NE(ij, std::strong_ordering::equal);
          EXPECT_EQ(ij == std::strong_ordering::less,
                    tie_break_compare(m, a, j, i) == std::strong_ordering::greater);
          if (m(a, i) != m(a, j)) {
            EXPECT_EQ(ij == std::strong_ordering::less, m(a, i) < m(a, j));
          }
        }
      }
      const auto ranks = tie_break_ranks(m.row(a));
      for (std::size_t i = 0; i < m.cols(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (i == j) continue;
          EXPECT_EQ(ranks[i] < ranks[j],
                    tie_break_compare(m, a, i, j) == std::strong_ordering::less);
        }
      }
    }
  }
}

// Columns increasing under the perturbed order stay weakly increasing under
// the original values.
TEST(TieBreak, PerturbedWitnessValidInOriginal) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = testing::random_matrix(rng, 2, 8, 0, 2);
    const auto ranks = tie_break_row_ranks(m);
    IndexList chain;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      bool above = true;
      if (!chain.empty()) {
        for (std::size_t a = 0; a < m.rows(); ++a) {
          above = above && ranks[a * m.cols() + c] > ranks[a * m.cols() + chain.back()];
        }
      }
      if (above) chain.push_back(c);
    }
    const IndexList rows{0, 1};
    EXPECT_TRUE(rows_satisfy(submatrix(m, rows, chain), Direction::kIncreasing));
  }
}

TEST(MonotoneProperties, HeredityAndImplication) {
  Rng rng(21);
  int monotone_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Matrix m = testing::random_matrix(rng, 2, 3, 0, 3);
    const auto row_dir = is_row_monotone(m);
    if (is_monotone(m)) {
      ++monotone_seen;
      EXPECT_TRUE(row_dir.has_value());
    }
    if (!row_dir) continue;
    for (std::uint32_t mask = 1; mask < 8; ++mask) {
      IndexList cols;
      for (std::size_t c = 0; c < 3; ++c) {
        if ((mask >> c) & 1U) cols.push_back(c);
      }
      const IndexList rows{0, 1};
      const Matrix sub = submatrix(m, rows, cols);
      EXPECT_TRUE(rows_satisfy(sub, *row_dir));
    }
  }
  EXPECT_GT(monotone_seen, 0);
}

TEST(Witness, SatisfiesChecksClaims) {
  const Matrix m = Matrix::from_rows({{1, 2, 0}, {3, 4, 9}});
  EXPECT_TRUE(satisfies(m, {{0, 1}, {0, 1}, Direction::kIncreasing, std::nullopt}));
  EXPECT_FALSE(satisfies(m, {{0, 1}, {0, 1}, Direction::kDecreasing, std::nullopt}));
  EXPECT_TRUE(satisfies(m, {{0, 1}, {0, 1}, Direction::kIncreasing,
                            Direction::kIncreasing}));
  EXPECT_FALSE(satisfies(m, {{0, 1}, {0, 1}, Direction::kIncreasing,
                             Direction::kDecreasing}));
  EXPECT_FALSE(satisfies(m, {{0, 1}, {1, 2}, Direction::kIncreasing, std::nullopt}));
  EXPECT_FALSE(satisfies(m, {{0, 5}, {0}, Direction::kIncreasing, std::nullopt}));
  EXPECT_FALSE(satisfies(m, {{}, {0}, Direction::kIncreasing, std::nullopt}));
}

TEST(Params, Derived) {
  const PipelineParams p = PipelineParams::derive(4);
  EXPECT_EQ(p.d, 128U);
  EXPECT_EQ(p.s, 2U);
  EXPECT_EQ(p.t, 16U);
  EXPECT_EQ(p.m, 2U * 128U * 16U);
  EXPECT_EQ(p.ell, 128U);
  EXPECT_EQ(p.c, 1000U);
  EXPECT_EQ(p.c0, 2000U);
  EXPECT_TRUE(p.is_derived());
  EXPECT_DOUBLE_EQ(p.required_log2_columns(), 1000.0 * 256 * 4);
  PipelineParams q = p;
  q.ell = 3;
  EXPECT_FALSE(q.is_derived());
  EXPECT_TRUE(q.is_positive());
  EXPECT_EQ(ceil_log2(1), 0U);
  EXPECT_EQ(ceil_log2(5), 3U);
  EXPECT_EQ(ceil_log2(8), 3U);
}

TEST(MatrixText, ParsesValuesAndComments) {
  std::istringstream in("# comment\n2 3\n1 -2 3/6\n\n0.25 7 -1.5\n");
  const Matrix m = read_matrix(in);
  EXPECT_EQ(m.rows(), 2U);
  EXPECT_EQ(m.at(0, 2), Value(1, 2));
  EXPECT_EQ(m.at(1, 0), Value(1, 4));
  EXPECT_EQ(m.at(1, 2), Value(-3, 2));
}

TEST(MatrixText, LeadingZerosAreDecimal) {
  EXPECT_EQ(parse_value("010"), Value(10));
  EXPECT_EQ(parse_value("-007"), Value(-7));
  EXPECT_EQ(parse_value("0.08"), Value(2, 25));
  EXPECT_EQ(parse_value("09/010"), Value(9, 10));
}

TEST(MatrixText, ErrorsNameTheLine) {
  std::istringstream bad_count("2 2\n1 2\n3\n");
  try {
    read_matrix(bad_count);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream bad_value("1 2\n1 x\n");
  try {
    read_matrix(bad_value);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  std::istringstream missing_rows("3 1\n1\n");
  EXPECT_THROW(read_matrix(missing_rows), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(read_matrix(empty), ParseError);
}

TEST(MatrixText, RoundTrip) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng.below(5);
    const std::size_t cols = 1 + rng.below(7);
    std::vector<Value> entries;
    for (std::size_t i = 0; i < rows * cols; ++i) {
      entries.emplace_back(rng.between(-1000, 1000), rng.between(1, 9));
    }
    const Matrix m(rows, cols, entries);
    std::ostringstream out;
    write_matrix(out, m, "first\nsecond");
    std::istringstream in(out.str());
    EXPECT_EQ(read_matrix(in), m);
  }
}

}  // namespace
}  // namespace monosub
