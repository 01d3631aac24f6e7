/*
   Copyright 2026 The cubic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "cubic/grouptable.hpp"
#include "cubic/hecke.hpp"
#include "cubic/idealdim.hpp"
#include "cubic/markov.hpp"
#include "cubic/ternary.hpp"

using namespace cubic;

namespace {

const GroupTable& gamma4() {
  static const GroupTable t = cached_group(4, CUBIC_BENCH_CACHE);
  return t;
}

void BM_EnumerateGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GroupTable::enumerate(n).order());
}
BENCHMARK(BM_EnumerateGroup)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_LoadGamma5(benchmark::State& state) {
  cached_group(5, CUBIC_BENCH_CACHE);
  for (auto _ : state) benchmark::DoNotOptimize(cached_group(5, CUBIC_BENCH_CACHE).order());
}
BENCHMARK(BM_LoadGamma5)->Unit(benchmark::kMillisecond);

void BM_KDim4(benchmark::State& state) {
  static const char* rings[] = {"f2", "f3", "f4", "f5"};
  const RingSpec ring = RingSpec::parse(rings[state.range(0)]);
  state.SetLabel(ring.name());
  for (auto _ : state) benchmark::DoNotOptimize(named_kn_dim(gamma4(), ring).quotient_dim);
}
BENCHMARK(BM_KDim4)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ZModule4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zmodule_structure(gamma4(), false).smith.rank);
}
BENCHMARK(BM_ZModule4)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_HeckeMult(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HeckeAlgebra h(n, RingSpec::f4(), 0, 1);
  std::mt19937 rng(1);
  const auto elems = h.ring().elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  PackedRow x = h.zero(), y = h.zero();
  for (std::size_t k = 0; k < h.dim(); ++k) {
    x.set(k, elems[pick(rng)]);
    y.set(k, elems[pick(rng)]);
  }
  for (auto _ : state) benchmark::DoNotOptimize(h.mult(x, y));
}
BENCHMARK(BM_HeckeMult)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_TernaryKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TernaryHecke(n, RingSpec::f4()).dim_by_kernel());
}
BENCHMARK(BM_TernaryKernel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_MarkovEval(benchmark::State& state) {
  const BraidWord w = BraidWord::parse("1,-2,3,-2,1,3,2,-1,2,3,-3,2,1");
  for (auto _ : state) {
    MarkovEvaluator ev;  // fresh memo per iteration
    benchmark::DoNotOptimize(ev(w));
  }
}
BENCHMARK(BM_MarkovEval)->Unit(benchmark::kMillisecond);

void BM_Mod4Trace(benchmark::State& state) {
  const BraidWord w = BraidWord::parse("1,-2,3,-4,2,1,3,-2,4,1");
  for (auto _ : state) benchmark::DoNotOptimize(mod4_trace(w));
}
BENCHMARK(BM_Mod4Trace)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
