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

#ifndef MONOSUB_RNG_HPP_
#define MONOSUB_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace monosub {

// Seeded generator with a platform-independent output stream.
//
// std::mt19937_64 is fully specified by the standard, but the standard
// distributions are not, so bounded draws and shuffles are implemented here.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  bool bit() { return (engine_() >> 63) != 0; }

  // Uniform draw from [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection on the top of the range keeps the draw exactly uniform.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform draw from the closed range [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace monosub

#endif  // MONOSUB_RNG_HPP_
