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


// Lower-bound witness matrices.
//
// A d x t sign matrix S with columns s_0 ... s_{t-1} defines a d x 2^t
// matrix whose k-th column is u_k = sum_i 2^(i+1) y_k(i) s_i, where y_k is the
// k-th bit vector of length t in colexicographic order. For k < l the sign
// vector of u_l - u_k is exactly s_b, b being the highest coordinate where
// y_k and y_l differ. So a set of columns is row-monotone on rows R only if
// all its pairwise b fall into columns of S that are constant on R, and
// there are at most 2^|B| such columns for such a column set B.

#ifndef MONOSUB_WITNESS_HPP_
#define MONOSUB_WITNESS_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monosub/coloring.hpp"
#include "monosub/matrix.hpp"

namespace monosub {

// Bit vector of length t <= 63; coordinate i is bit i of `bits`.
class BitVector {
 public:
  static constexpr std::size_t kMaxLength = 63;

  // Throws InvalidArgument for lengths above kMaxLength or stray bits.
  BitVector(std::size_t length, std::uint64_t bits);

  std::size_t length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool operator[](std::size_t i) const { return ((bits_ >> i) & 1U) != 0; }

  // "0110" style, coordinate 0 first.
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t length_;
  std::uint64_t bits_;
};

// Colexicographic order: x < y iff y holds the 1 at the highest coordinate
// where they differ. Throws LengthMismatch.
std::strong_ordering colex_compare(const BitVector& x, const BitVector& y);

// Highest differing coordinate. Throws LengthMismatch, EqualVectors.
std::size_t colex_delta(const BitVector& x, const BitVector& y);

// The bit vector of zero-based colex rank k: the binary expansion of k.
// Throws RankOutOfRange unless k < 2^t.
BitVector colex_unrank(std::size_t t, std::uint64_t k);
std::uint64_t colex_rank(const BitVector& x);

// d x t matrix over {-, +}.
class SignMatrix {
 public:
  // All plus.
  SignMatrix(std::size_t rows, std::size_t cols);
  SignMatrix(std::size_t rows, std::size_t cols, std::vector<Sign> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Sign at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, Sign sign);
  SignVector column(std::size_t col) const;

  // Red for '+', blue for '-'.
  ColoredMatrix to_colored() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Sign> entries_;
};

struct SampleRequest {
  std::size_t d = 1;
  std::size_t t = 1;
  std::size_t n = 1;
  std::size_t s = 1;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 100'000;
};

struct SampledSignMatrix {
  SignMatrix matrix;
  std::size_t attempts = 0;
};

// Uniform d x t sign matrices, drawn row by row from a generator seeded with
// `seed`, until one has no n x s single-sign submatrix (checked by brute
// force). Throws ExhaustedAttempts after max_attempts rejections and
// InvalidArgument for zero parameters.
SampledSignMatrix sample_sign_matrix(const SampleRequest& request);

// Implicit d x 2^t witness matrix over a sign matrix.
class WitnessMatrix {
 public:
  static constexpr std::size_t kMaxMaterialize = 20;

  // Throws InvalidArgument when t exceeds BitVector::kMaxLength - 1.
  explicit WitnessMatrix(SignMatrix signs);

  const SignMatrix& signs() const noexcept { return signs_; }
  std::size_t rows() const noexcept { return signs_.rows(); }
  std::size_t t() const noexcept { return signs_.cols(); }
  std::uint64_t cols() const noexcept { return std::uint64_t{1} << t(); }

 private:
  SignMatrix signs_;
};

WitnessMatrix build_witness(const SignMatrix& signs);

// Entry (a, k) = sum_i 2^(i+1) bit_i(k) S(a, i). Throws IndexOutOfBounds.
BigInt witness_entry(const WitnessMatrix& w, std::size_t a, std::uint64_t k);

// Column u_k as exact integers.
std::vector<BigInt> witness_column(const WitnessMatrix& w, std::uint64_t k);

// Dense matrix of all 2^t columns; throws InvalidArgument for t above
// kMaxMaterialize.
Matrix materialize(const WitnessMatrix& w);

struct RowSetCheck {
  IndexList rows;
  IndexList b_plus;   // sign columns that are all '+' on rows
  IndexList b_minus;  // sign columns that are all '-' on rows

  std::size_t b() const { return std::max(b_plus.size(), b_minus.size()); }
  friend bool operator==(const RowSetCheck&, const RowSetCheck&) = default;
};

struct VerifyOptions {
  // Row sets examined; exhaustive when C(d, n) fits.
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  // Failing row sets kept in the report.
  std::size_t max_failures = 16;
};

struct WitnessCheckReport {
  bool pass = true;
  bool exhaustive = true;
  std::size_t n = 0;
  std::uint64_t tested = 0;  // distinct row sets examined
  double total = 0;          // C(d, n)
  double coverage = 1;       // tested / total
  std::optional<RowSetCheck> worst;
  std::vector<RowSetCheck> failures;
  // On failure, an n x n row-monotone submatrix built from the worst row
  // set, in witness column indices.
  std::optional<SubmatrixWitness> counterexample;
};

// Structural check that no n x n row-monotone submatrix exists: every
// examined n-row set R must have 2^max(|B+(R)|, |B-(R)|) < n. Row sets are
// enumerated exhaustively when C(d, n) <= budget and sampled otherwise.
WitnessCheckReport verify_witness(const WitnessMatrix& w, std::size_t n,
                                  const VerifyOptions& options = {});

// Sign-matrix files: "d t", then d lines of t '+'/'-' entries. Entries may
// be separated by spaces or written contiguously; '#' lines are comments.
SignMatrix read_sign_matrix(std::istream& in);
// Each line of `comment` is written as a '#' line before the header.
void write_sign_matrix(std::ostream& out, const SignMatrix& signs,
                       std::string_view comment = {});

// Implicit witness transport: a "witness t=<t>" line, then the sign matrix.
WitnessMatrix read_witness(std::istream& in);
void write_witness(std::ostream& out, const WitnessMatrix& w,
                   std::string_view comment = {});

}  // namespace monosub

#endif  // MONOSUB_WITNESS_HPP_
