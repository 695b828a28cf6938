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

#include "monosub/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace monosub {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

// cpp_int's string constructor reads a leading 0 as octal.
BigInt decimal_digits(std::string_view digits) {
  BigInt value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

BigInt parse_integer(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw ParseError("malformed number '" + std::string(token) + "'");
  }
  const BigInt value = decimal_digits(body);
  return negative ? BigInt(-value) : value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_skippable(std::string_view line) {
  const auto tokens = split_ws(line);
  return tokens.empty() || tokens.front().front() == '#';
}

std::size_t parse_dimension(std::string_view token, std::size_t line_no) {
  if (!all_digits(token)) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected a positive integer, got '" +
                     std::string(token) + "'");
  }
  const auto value = std::stoull(std::string(token));
  if (value == 0) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": dimensions must be positive");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Value parse_value(std::string_view token) {
  if (token.empty()) throw ParseError("empty value");
  if (const auto slash = token.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(token.substr(0, slash));
    const std::string_view den_text = token.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw ParseError("malformed fraction '" + std::string(token) + "'");
    }
    const BigInt den = decimal_digits(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
    return Value(num, den);
  }
  if (const auto dot = token.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = token.substr(0, dot);
    const std::string_view frac = token.substr(dot + 1);
    if (!all_digits(frac)) {
      throw ParseError("malformed decimal '" + std::string(token) + "'");
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    std::string_view whole_digits = whole;
    if (!whole_digits.empty() &&
        (whole_digits.front() == '-' || whole_digits.front() == '+')) {
      whole_digits.remove_prefix(1);
    }
    if (!whole_digits.empty() && !all_digits(whole_digits)) {
      throw ParseError("malformed decimal '" + std::string(token) + "'");
    }
    const BigInt scaled =
        decimal_digits(std::string(whole_digits) + std::string(frac));
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Value(negative ? BigInt(-scaled) : scaled, den);
  }
  return Value(parse_integer(token));
}

std::string format_value(const Value& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Matrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool have_header = false;
  std::vector<Value> entries;
  std::size_t rows_read = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto tokens = split_ws(line);
    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'd N'");
      }
      rows = parse_dimension(tokens[0], line_no);
      cols = parse_dimension(tokens[1], line_no);
      have_header = true;
      entries.reserve(rows * cols);
      continue;
    }
    if (rows_read == rows) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": more than " + std::to_string(rows) + " rows");
    }
    if (tokens.size() != cols) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(cols) + " values, got " +
                       std::to_string(tokens.size()));
    }
    for (auto token : tokens) {
      try {
        entries.push_back(parse_value(token));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    ++rows_read;
  }
  if (!have_header) throw ParseError("line 1: missing header 'd N'");
  if (rows_read != rows) {
    throw ParseError("line " + std::to_string(line_no) + ": expected " +
                     std::to_string(rows) + " rows, got " +
                     std::to_string(rows_read));
  }
  return Matrix(rows, cols, std::move(entries));
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m,
                  std::string_view comment) {
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << format_value(m(r, c));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const Matrix& m,
                       std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_matrix(out, m, comment);
}

}  // namespace monosub
