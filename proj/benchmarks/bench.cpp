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


#include <benchmark/benchmark.h>

#include <numeric>

#include "monosub/coloring.hpp"
#include "monosub/oracle.hpp"
#include "monosub/pipeline.hpp"
#include "monosub/rng.hpp"
#include "monosub/sequence.hpp"
#include "monosub/witness.hpp"

namespace monosub {
namespace {

IndexedSequence permutations(Rng& rng, std::size_t dim, std::size_t count) {
  std::vector<std::int64_t> coords(dim * count);
  std::vector<std::int64_t> perm(count);
  for (std::size_t a = 0; a < dim; ++a) {
    std::iota(perm.begin(), perm.end(), std::int64_t{0});
    rng.shuffle(std::span<std::int64_t>(perm));
    for (std::size_t k = 0; k < count; ++k) coords[k * dim + a] = perm[k];
  }
  IndexList tags(count);
  std::iota(tags.begin(), tags.end(), std::size_t{0});
  return IndexedSequence(dim, std::move(coords), std::move(tags));
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<Value> entries(rows * cols);
  for (auto& e : entries) e = rng.between(0, 1 << 20);
  return Matrix(rows, cols, std::move(entries));
}

void BM_BipartiteSplit(benchmark::State& state) {
  Rng rng(1);
  const auto seq = permutations(rng, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bipartite_split(seq));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BipartiteSplit)->RangeMultiplier(4)->Range(64, 65536);

void BM_TreeLike(benchmark::State& state) {
  Rng rng(2);
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto seq = permutations(rng, 1, std::size_t{1} << (2 * m));
  for (auto _ : state) benchmark::DoNotOptimize(tree_like_subsequence(seq, m));
}
BENCHMARK(BM_TreeLike)->DenseRange(2, 7);

void BM_Monochromatic(benchmark::State& state) {
  Rng rng(3);
  ColoredMatrix cm(48, 16);
  for (std::size_t r = 0; r < 48; ++r) {
    for (std::size_t c = 0; c < 16; ++c) cm.set(r, c, rng.bit() ? Color::kRed : Color::kBlue);
  }
  for (auto _ : state) benchmark::DoNotOptimize(monochromatic_submatrix(cm, 3, 2));
}
BENCHMARK(BM_Monochromatic);

void BM_FindRowMonotone(benchmark::State& state) {
  Rng rng(4);
  const auto m = random_matrix(rng, 16, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_row_monotone(m, 4));
}
BENCHMARK(BM_FindRowMonotone)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_FindMonotone(benchmark::State& state) {
  Rng rng(5);
  const auto m = random_matrix(rng, 16, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_monotone(m, 2));
}
BENCHMARK(BM_FindMonotone)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_OracleRowMonotone(benchmark::State& state) {
  const auto sampled = sample_sign_matrix(SampleRequest{6, 5, 3, 2, 7, 100000});
  const Matrix m = materialize(build_witness(sampled.matrix));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_row_monotone(m, 3));
}
BENCHMARK(BM_OracleRowMonotone)->Unit(benchmark::kMillisecond);

void BM_VerifyWitness(benchmark::State& state) {
  Rng rng(6);
  SignMatrix signs(16, 20);
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = 0; c < 20; ++c) signs.set(r, c, rng.bit() ? Sign::kPlus : Sign::kMinus);
  }
  const auto w = build_witness(signs);
  for (auto _ : state) benchmark::DoNotOptimize(verify_witness(w, 4));
}
BENCHMARK(BM_VerifyWitness)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace monosub

BENCHMARK_MAIN();
