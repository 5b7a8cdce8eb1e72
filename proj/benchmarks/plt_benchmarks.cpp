// Copyright 2026 The PLT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "plt/bounds.hpp"
#include "plt/codes.hpp"
#include "plt/protocol.hpp"

namespace {

using namespace plt;

FqMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, Rng& rng) {
  FqMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.element(f);
  }
  return m;
}

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const FqMatrix m = random_matrix(PrimeField(65537), n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(32)->Arg(128);

void BM_IsMdsGrs(benchmark::State& state) {
  Rng rng(2);
  const FqMatrix m = random_mds(PrimeField(17), 5, 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_mds(m));
}
BENCHMARK(BM_IsMdsGrs);

void BM_IsMdsExhaustive(benchmark::State& state) {
  Rng rng(3);
  const FqMatrix m = random_mds(PrimeField(17), 5, 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_mds_exhaustive(m));
}
BENCHMARK(BM_IsMdsExhaustive);

void BM_BuildQuery(benchmark::State& state) {
  const auto p = derive_params(static_cast<std::size_t>(state.range(0)), 9, 2, 17);
  Rng rng(4);
  const Demand d = random_demand(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_query(d, p, rng));
}
BENCHMARK(BM_BuildQuery)->Arg(24)->Arg(240)->Arg(2400);

void BM_Answer(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  const auto p = derive_params(K, 9, 2, 17);
  Rng rng(5);
  const QueryBundle qb = build_query(random_demand(p, rng), p, rng);
  const FqMatrix x = random_matrix(PrimeField(17), K, 64, rng);
  for (auto _ : state) benchmark::DoNotOptimize(answer(qb.query, x));
}
BENCHMARK(BM_Answer)->Arg(24)->Arg(240)->Arg(2400);

void BM_IlpBruteforce(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ilp_bruteforce(K, K / 3, 2));
}
BENCHMARK(BM_IlpBruteforce)->Arg(30)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
