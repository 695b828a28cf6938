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

// Matrix text format:
//
//   d N
//   v v ... v        (d lines of N values, single-space separated)
//
// Lines starting with '#' and blank lines are ignored. Values are integers
// ("-12"), terminating decimals ("2.75") or fractions ("11/4"). Writing
// emits integers or reduced fractions, which re-parse to the same value.

#ifndef MONOSUB_MATRIX_IO_HPP_
#define MONOSUB_MATRIX_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "monosub/matrix.hpp"

namespace monosub {

// Throws ParseError naming the offending line.
Value parse_value(std::string_view token);
std::string format_value(const Value& value);

Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

// Each line of `comment` is emitted as a "# " line before the header.
void write_matrix(std::ostream& out, const Matrix& m,
                  std::string_view comment = {});
void write_matrix_file(const std::string& path, const Matrix& m,
                       std::string_view comment = {});

}  // namespace monosub

#endif  // MONOSUB_MATRIX_IO_HPP_
