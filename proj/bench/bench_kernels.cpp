/* Copyright 2026 The mcad Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mcad/kernels.hpp"

namespace {

using mcad::kernels::Trans;

std::vector<float> random_vector(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  std::vector<float> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

template <bool kParallel>
void BM_Gemm(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto a = random_vector(std::size_t(n) * n, 1), b = random_vector(std::size_t(n) * n, 2);
  std::vector<float> c(std::size_t(n) * n);
  for (auto _ : state) {
    if constexpr (kParallel)
      mcad::kernels::gemm(Trans::kNo, Trans::kNo, n, n, n, 1.0f, a.data(), n, b.data(), n, 0.0f, c.data(), n);
    else
      mcad::kernels::reference::gemm(Trans::kNo, Trans::kNo, n, n, n, 1.0f, a.data(), n, b.data(), n, 0.0f,
                                     c.data(), n);
    benchmark::DoNotOptimize(c.data());
  }
  state.counters["GFLOPS"] =
      benchmark::Counter(2.0 * n * n * n * double(state.iterations()), benchmark::Counter::kIsRate,
                         benchmark::Counter::kIs1000);
}

// Batch 32 of 3x3 convolutions at the encoder's first-stage shape.
template <bool kParallel>
void BM_Conv(benchmark::State& state) {
  const int batch = 32, cin = int(state.range(0)), cout = int(state.range(1)), hw = int(state.range(2));
  const auto x = random_vector(std::size_t(batch) * cin * hw * hw, 3);
  const auto w = random_vector(std::size_t(cout) * cin * 9, 4);
  const auto bias = random_vector(cout, 5);
  std::vector<float> y(std::size_t(batch) * cout * hw * hw);
  for (auto _ : state) {
    if constexpr (kParallel)
      mcad::kernels::conv2d_forward(x.data(), batch, cin, hw, hw, w.data(), bias.data(), cout, 3, 1, 1, y.data());
    else
      mcad::kernels::reference::conv2d_forward(x.data(), batch, cin, hw, hw, w.data(), bias.data(), cout, 3, 1, 1,
                                               y.data());
    benchmark::DoNotOptimize(y.data());
  }
  state.counters["GFLOPS"] = benchmark::Counter(2.0 * batch * cout * cin * 9 * hw * hw * double(state.iterations()),
                                                benchmark::Counter::kIsRate, benchmark::Counter::kIs1000);
}

}  // namespace

BENCHMARK(BM_Gemm<false>)->Name("gemm/reference")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_Gemm<true>)->Name("gemm/parallel")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_Conv<false>)->Name("conv3x3/reference")->Args({3, 32, 24})->Args({32, 64, 12});
BENCHMARK(BM_Conv<true>)->Name("conv3x3/parallel")->Args({3, 32, 24})->Args({32, 64, 12});

BENCHMARK_MAIN();
