// Copyright 2026 The cfact Authors
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

#include "cfact/bell.hpp"
#include "cfact/central_numbers.hpp"
#include "cfact/first_kind.hpp"
#include "cfact/series.hpp"

namespace {

using cfact::Rational;

void BM_SeriesMul(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto a = cfact::central_difference_kernel(order);
  for (auto _ : state) benchmark::DoNotOptimize(cfact::mul(a, a));
}
BENCHMARK(BM_SeriesMul)->Arg(20)->Arg(40);

void BM_SeriesExp(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto a = cfact::central_difference_kernel(order);
  for (auto _ : state) benchmark::DoNotOptimize(cfact::exp(a));
}
BENCHMARK(BM_SeriesExp)->Arg(20)->Arg(40);

void BM_LogKernel(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfact::central_log_kernel(order));
  }
}
BENCHMARK(BM_LogKernel)->Arg(20)->Arg(40);

void BM_TriangleDirect(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfact::second_kind_direct_table(
        cfact::Family::Tr, nmax, Rational(1, 2)));
  }
}
BENCHMARK(BM_TriangleDirect)->Arg(15)->Arg(30);

void BM_TriangleGf(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cfact::triangle_via_gf(cfact::Family::Tr, nmax, Rational(1, 2)));
  }
}
BENCHMARK(BM_TriangleGf)->Arg(15)->Arg(30);

void BM_FirstKindRecurrence(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfact::r_central_factorial_first_recurrence_table(
        nmax, Rational(-3, 2)));
  }
}
BENCHMARK(BM_FirstKindRecurrence)->Arg(15)->Arg(30);

void BM_Dobinski(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cfact::dobinski_eval(n, 2.0));
}
BENCHMARK(BM_Dobinski)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
