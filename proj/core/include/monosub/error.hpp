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

#ifndef MONOSUB_ERROR_HPP_
#define MONOSUB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monosub {

// Base class for every error raised by the library. Each contract violation
// has its own subclass so callers can catch precisely what they expect.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MONOSUB_DEFINE_ERROR(Name)        \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

MONOSUB_DEFINE_ERROR(IndexOutOfBounds);
MONOSUB_DEFINE_ERROR(InvalidArgument);
MONOSUB_DEFINE_ERROR(ParseError);

// rooted trees
MONOSUB_DEFINE_ERROR(LeafOutOfRange);
MONOSUB_DEFINE_ERROR(EmptySet);
MONOSUB_DEFINE_ERROR(DepthOutOfRange);
MONOSUB_DEFINE_ERROR(NotPerfect);

// extraction
MONOSUB_DEFINE_ERROR(TooShort);
MONOSUB_DEFINE_ERROR(InsufficientLength);
MONOSUB_DEFINE_ERROR(NotPowerOfTwo);
MONOSUB_DEFINE_ERROR(InsufficientTree);

// witness generation
MONOSUB_DEFINE_ERROR(LengthMismatch);
MONOSUB_DEFINE_ERROR(EqualVectors);
MONOSUB_DEFINE_ERROR(RankOutOfRange);

// oracle
MONOSUB_DEFINE_ERROR(BudgetExceeded);

#undef MONOSUB_DEFINE_ERROR

// Two compared vectors agree in some coordinate.
class TiedCoordinate : public Error {
 public:
  explicit TiedCoordinate(std::size_t coordinate)
      : Error("tied coordinate " + std::to_string(coordinate)),
        coordinate_(coordinate) {}

  // Zero-based coordinate at which the tie occurred.
  std::size_t coordinate() const noexcept { return coordinate_; }

 private:
  std::size_t coordinate_;
};

class ExhaustedAttempts : public Error {
 public:
  explicit ExhaustedAttempts(std::size_t attempts)
      : Error("no acceptable sample after " + std::to_string(attempts) +
              " attempts"),
        attempts_(attempts) {}

  std::size_t attempts() const noexcept { return attempts_; }

 private:
  std::size_t attempts_;
};

}  // namespace monosub

#endif  // MONOSUB_ERROR_HPP_
