// Copyright 2026 The persum Authors.
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

#include "persum/catalog.hpp"
#include "persum/expr.hpp"
#include "persum/series.hpp"
#include "persum/special.hpp"
#include "persum/sums.hpp"

namespace {

using namespace persum;

void BM_LogGammaComplex(benchmark::State& state) {
  Complex z(0.3, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(z));
    z += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_LogGammaComplex);

void BM_HarmonicRational(benchmark::State& state) {
  const Rational x(5, 12);
  for (auto _ : state) benchmark::DoNotOptimize(harmonic(x));
}
BENCHMARK(BM_HarmonicRational);

void BM_GaussFormula(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_fractional_harmonic(1, q));
}
BENCHMARK(BM_GaussFormula)->Arg(4)->Arg(64)->Arg(1024);

// Brute summation is O(n); the anti-difference route costs q extension calls.
void BM_BruteSp(benchmark::State& state) {
  const auto e = entry_recip4();
  for (auto _ : state) benchmark::DoNotOptimize(brute_S_p(e.f, 4, 1, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteSp)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

void BM_AntiSp(benchmark::State& state) {
  const auto e = entry_recip4();
  const auto fam = e.family();
  const auto method = static_cast<IndicatorMethod>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(s_p_from_anti(fam, 1, state.range(0), method));
}
BENCHMARK(BM_AntiSp)
    ->ArgsProduct({{100, 100000}, {static_cast<int>(IndicatorMethod::Floor),
                                   static_cast<int>(IndicatorMethod::RootsOfUnity)}});

void BM_GfDft(benchmark::State& state) {
  const auto F = series_from_sequence(entry_harmonic4().f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gf_S_p_dft(F, 5, 2));
}
BENCHMARK(BM_GfDft)->Arg(64)->Arg(4096);

void BM_GfDecimate(benchmark::State& state) {
  const auto F = series_from_sequence(entry_harmonic4().f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gf_S_p_decimate(F, 5, 2));
}
BENCHMARK(BM_GfDecimate)->Arg(64)->Arg(4096);

void BM_ParseExpression(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_expression("cos(2*k*pi/3) + (-1)^k/(k+1)"));
}
BENCHMARK(BM_ParseExpression);

void BM_EvalExpression(benchmark::State& state) {
  const Expr e = parse_expression("cos(2*k*pi/3) + (-1)^k/(k+1)");
  std::int64_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(e(k++ & 1023));
}
BENCHMARK(BM_EvalExpression);

}  // namespace

BENCHMARK_MAIN();
