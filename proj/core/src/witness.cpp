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


#include "monosub/witness.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "monosub/oracle.hpp"
#include "monosub/rng.hpp"

namespace monosub {

BitVector::BitVector(std::size_t length, std::uint64_t bits)
    : length_(length), bits_(bits) {
  if (length > kMaxLength) {
    throw InvalidArgument("bit vectors are limited to " +
                          std::to_string(kMaxLength) + " coordinates");
  }
  if ((bits >> length) != 0) {
    throw InvalidArgument("bits set beyond the vector length");
  }
}

std::string BitVector::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((*this)[i]) out[i] = '1';
  }
  return out;
}

std::strong_ordering colex_compare(const BitVector& x, const BitVector& y) {
  if (x.length() != y.length()) {
    throw LengthMismatch("colex comparison of different lengths");
  }
  // Comparing as integers looks at the highest differing bit first.
  return x.bits() <=> y.bits();
}

std::size_t colex_delta(const BitVector& x, const BitVector& y) {
  if (x.length() != y.length()) {
    throw LengthMismatch("colex delta of different lengths");
  }
  const std::uint64_t diff = x.bits() ^ y.bits();
  if (diff == 0) throw EqualVectors("colex delta of equal vectors");
  return static_cast<std::size_t>(std::bit_width(diff)) - 1;
}

BitVector colex_unrank(std::size_t t, std::uint64_t k) {
  if (t > BitVector::kMaxLength || (k >> t) != 0) {
    throw RankOutOfRange("rank " + std::to_string(k) +
                         " outside the colex order of length " +
                         std::to_string(t));
  }
  return BitVector(t, k);
}

std::uint64_t colex_rank(const BitVector& x) { return x.bits(); }

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Sign::kPlus) {}

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols,
                       std::vector<Sign> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InvalidArgument("sign matrix entry count does not match");
  }
}

Sign SignMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw IndexOutOfBounds("sign matrix index out of bounds");
  }
  return entries_[row * cols_ + col];
}

void SignMatrix::set(std::size_t row, std::size_t col, Sign sign) {
  if (row >= rows_ || col >= cols_) {
    throw IndexOutOfBounds("sign matrix index out of bounds");
  }
  entries_[row * cols_ + col] = sign;
}

SignVector SignMatrix::column(std::size_t col) const {
  std::vector<Sign> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, col);
  return SignVector(std::move(out));
}

ColoredMatrix SignMatrix::to_colored() const {
  ColoredMatrix cm(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      cm.set(r, c, at(r, c) == Sign::kPlus ? Color::kRed : Color::kBlue);
    }
  }
  return cm;
}

SampledSignMatrix sample_sign_matrix(const SampleRequest& request) {
  if (request.d == 0 || request.t == 0 || request.n == 0 || request.s == 0 ||
      request.max_attempts == 0) {
    throw InvalidArgument("sampling parameters must be positive");
  }
  Rng rng(request.seed);
  std::vector<Sign> entries(request.d * request.t);
  for (std::size_t attempt = 1; attempt <= request.max_attempts; ++attempt) {
    for (Sign& e : entries) e = rng.bit() ? Sign::kPlus : Sign::kMinus;
    SignMatrix candidate(request.d, request.t, entries);
    if (!brute_force_monochromatic(candidate.to_colored(), request.n,
                                   request.s)) {
      return SampledSignMatrix{std::move(candidate), attempt};
    }
  }
  throw ExhaustedAttempts(request.max_attempts);
}

WitnessMatrix::WitnessMatrix(SignMatrix signs) : signs_(std::move(signs)) {
  if (signs_.cols() >= BitVector::kMaxLength) {
    throw InvalidArgument("witness matrices need t <= " +
                          std::to_string(BitVector::kMaxLength - 1));
  }
}

WitnessMatrix build_witness(const SignMatrix& signs) {
  return WitnessMatrix(signs);
}

BigInt witness_entry(const WitnessMatrix& w, std::size_t a, std::uint64_t k) {
  if (a >= w.rows() || k >= w.cols()) {
    throw IndexOutOfBounds("witness entry out of bounds");
  }
  BigInt sum = 0;
  for (std::size_t i = 0; i < w.t(); ++i) {
    if (((k >> i) & 1U) == 0) continue;
    const BigInt weight = BigInt(1) << (i + 1);
    if (w.signs().at(a, i) == Sign::kPlus) {
      sum += weight;
    } else {
      sum -= weight;
    }
  }
  return sum;
}

std::vector<BigInt> witness_column(const WitnessMatrix& w, std::uint64_t k) {
  std::vector<BigInt> out(w.rows());
  for (std::size_t a = 0; a < w.rows(); ++a) out[a] = witness_entry(w, a, k);
  return out;
}

Matrix materialize(const WitnessMatrix& w) {
  if (w.t() > WitnessMatrix::kMaxMaterialize) {
    throw InvalidArgument("materialization is limited to t <= " +
                          std::to_string(WitnessMatrix::kMaxMaterialize));
  }
  const auto cols = static_cast<std::size_t>(w.cols());
  std::vector<Value> entries;
  entries.reserve(w.rows() * cols);
  for (std::size_t a = 0; a < w.rows(); ++a) {
    for (std::size_t k = 0; k < cols; ++k) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < w.t(); ++i) {
        if (((k >> i) & 1U) == 0) continue;
        const std::int64_t weight = std::int64_t{2} << i;
        sum += w.signs().at(a, i) == Sign::kPlus ? weight : -weight;
      }
      entries.emplace_back(sum);
    }
  }
  return Matrix(w.rows(), cols, std::move(entries));
}

namespace {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out = out * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return out;
}

RowSetCheck check_rows(const SignMatrix& signs, const IndexList& rows) {
  RowSetCheck out{rows, {}, {}};
  for (std::size_t i = 0; i < signs.cols(); ++i) {
    bool plus = true;
    bool minus = true;
    for (std::size_t r : rows) {
      if (signs.at(r, i) == Sign::kPlus) {
        minus = false;
      } else {
        plus = false;
      }
    }
    if (plus) out.b_plus.push_back(i);
    if (minus) out.b_minus.push_back(i);
  }
  return out;
}

// n columns of the witness whose pairwise highest differing coordinate lies
// in `b`: the ranks built from the first n subsets of `b`.
IndexList clique_columns(const IndexList& b, std::size_t n) {
  IndexList cols;
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint64_t col = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (((k >> j) & 1U) != 0) col |= std::uint64_t{1} << b[j];
    }
    cols.push_back(static_cast<std::size_t>(col));
  }
  return cols;
}

}  // namespace

WitnessCheckReport verify_witness(const WitnessMatrix& w, std::size_t n,
                                  const VerifyOptions& options) {
  if (n == 0) throw InvalidArgument("verification needs n >= 1");
  WitnessCheckReport report;
  report.n = n;
  const std::size_t d = w.rows();
  report.total = binomial(d, n);
  if (n > d) return report;

  // 2^b >= n exactly when b >= ceil(log2 n).
  const std::size_t limit = ceil_log2(n);
  auto examine = [&](const IndexList& rows) {
    ++report.tested;
    RowSetCheck check = check_rows(w.signs(), rows);
    if (!report.worst || check.b() > report.worst->b()) report.worst = check;
    if (check.b() >= limit) {
      report.pass = false;
      if (report.failures.size() < options.max_failures) {
        report.failures.push_back(std::move(check));
      }
    }
  };

  report.exhaustive = report.total <= static_cast<double>(options.budget);
  if (report.exhaustive) {
    IndexList pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    while (true) {
      examine(pick);
      std::size_t i = n;
      while (i > 0 && pick[i - 1] == d - n + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
  } else {
    Rng rng(options.seed);
    std::set<IndexList> seen;
    IndexList pool(d);
    for (std::uint64_t draw = 0; draw < options.budget; ++draw) {
      for (std::size_t i = 0; i < d; ++i) pool[i] = i;
      // Partial Fisher-Yates: the first n slots are a uniform n-subset.
      for (std::size_t i = 0; i < n; ++i) {
        std::swap(pool[i], pool[i + rng.below(d - i)]);
      }
      IndexList rows(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
      std::sort(rows.begin(), rows.end());
      if (seen.insert(rows).second) examine(rows);
    }
  }
  report.coverage = report.total > 0
                        ? static_cast<double>(report.tested) / report.total
                        : 1.0;

  if (!report.pass) {
    const RowSetCheck& bad = report.failures.front();
    const bool plus = bad.b_plus.size() >= limit;
    report.counterexample = SubmatrixWitness{
        bad.rows, clique_columns(plus ? bad.b_plus : bad.b_minus, n),
        plus ? Direction::kIncreasing : Direction::kDecreasing, std::nullopt};
  }
  return report;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

bool skippable(const std::vector<std::string>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

std::string at_line(std::size_t line_no) {
  return "line " + std::to_string(line_no) + ": ";
}

std::size_t parse_count(const std::string& token, std::size_t line_no) {
  if (token.empty() ||
      token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(at_line(line_no) + "expected a positive integer, got '" +
                     token + "'");
  }
  const auto value = std::stoull(token);
  if (value == 0) throw ParseError(at_line(line_no) + "dimensions must be positive");
  return static_cast<std::size_t>(value);
}

SignMatrix read_signs(std::istream& in, std::size_t& line_no) {
  std::string line;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool have_header = false;
  std::vector<Sign> entries;
  std::size_t rows_read = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (skippable(tokens)) continue;
    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError(at_line(line_no) + "expected header 'd t'");
      }
      rows = parse_count(tokens[0], line_no);
      cols = parse_count(tokens[1], line_no);
      have_header = true;
      continue;
    }
    if (rows_read == rows) {
      throw ParseError(at_line(line_no) + "more than " +
                       std::to_string(rows) + " rows");
    }
    std::size_t count = 0;
    for (const auto& token : tokens) {
      for (char c : token) {
        if (c != '+' && c != '-') {
          throw ParseError(at_line(line_no) + "unexpected character '" +
                           std::string(1, c) + "' in a sign row");
        }
        entries.push_back(c == '+' ? Sign::kPlus : Sign::kMinus);
        ++count;
      }
    }
    if (count != cols) {
      throw ParseError(at_line(line_no) + "expected " + std::to_string(cols) +
                       " signs, got " + std::to_string(count));
    }
    ++rows_read;
  }
  if (!have_header) throw ParseError(at_line(line_no) + "missing header 'd t'");
  if (rows_read != rows) {
    throw ParseError(at_line(line_no) + "expected " + std::to_string(rows) +
                     " rows, got " + std::to_string(rows_read));
  }
  return SignMatrix(rows, cols, std::move(entries));
}

void write_comment(std::ostream& out, std::string_view comment) {
  if (comment.empty()) return;
  std::istringstream lines{std::string(comment)};
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << '\n';
}

}  // namespace

SignMatrix read_sign_matrix(std::istream& in) {
  std::size_t line_no = 0;
  return read_signs(in, line_no);
}

void write_sign_matrix(std::ostream& out, const SignMatrix& signs,
                       std::string_view comment) {
  write_comment(out, comment);
  out << signs.rows() << ' ' << signs.cols() << '\n';
  for (std::size_t r = 0; r < signs.rows(); ++r) {
    for (std::size_t c = 0; c < signs.cols(); ++c) {
      if (c > 0) out << ' ';
      out << (signs.at(r, c) == Sign::kPlus ? '+' : '-');
    }
    out << '\n';
  }
}

WitnessMatrix read_witness(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (skippable(tokens)) continue;
    if (tokens.size() != 2 || tokens[0] != "witness" ||
        tokens[1].rfind("t=", 0) != 0) {
      throw ParseError(at_line(line_no) + "expected 'witness t=<t>'");
    }
    const std::string t_text = tokens[1].substr(2);
    if (t_text.empty() ||
        t_text.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(at_line(line_no) + "malformed t in '" + tokens[1] + "'");
    }
    const auto t = static_cast<std::size_t>(std::stoull(t_text));
    SignMatrix signs = read_signs(in, line_no);
    if (signs.cols() != t) {
      throw ParseError(at_line(line_no) + "sign matrix has " +
                       std::to_string(signs.cols()) + " columns, header says " +
                       std::to_string(t));
    }
    return WitnessMatrix(std::move(signs));
  }
  throw ParseError(at_line(line_no) + "missing 'witness t=<t>' header");
}

void write_witness(std::ostream& out, const WitnessMatrix& w,
                   std::string_view comment) {
  write_comment(out, comment);
  out << "witness t=" << w.t() << '\n';
  write_sign_matrix(out, w.signs());
}

}  // namespace monosub
