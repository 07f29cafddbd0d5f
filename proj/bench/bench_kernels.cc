// Copyright 2026 The boostsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Reference (molecule-at-a-time) kernels against the OpenMP word kernels.
// The argument is the molecule count; the word kernels also sweep threads.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "boostsim/counter_rng.h"
#include "boostsim/plane_kernels.h"

namespace {

using namespace boostsim;

struct Planes {
  explicit Planes(std::size_t molecules)
      : n(molecules), a(WordsFor(n)), b(a.size()), c(a.size()),
        oa(a.size()), ob(a.size()), oc(a.size()) {
    const CounterRng rng(7);
    const uint64_t t = MantissaThreshold(0.8);
    kernels::FillPlane(a, n, rng, 0, t);
    kernels::FillPlane(b, n, rng, 1, t);
    kernels::FillPlane(c, n, rng, 2, t);
  }
  std::size_t n;
  std::vector<Word> a, b, c, oa, ob, oc;
};

void SetThreads(benchmark::State& state) {
  SetKernelThreads(state.range(1));
}

void Finish(benchmark::State& state) {
  state.SetItemsProcessed(state.iterations() * state.range(0));
  SetKernelThreads(0);
}

void BM_FillPlane_Reference(benchmark::State& state) {
  Planes p(state.range(0));
  const CounterRng rng(1);
  for (auto _ : state) {
    kernels::reference::FillPlane(p.a, p.n, rng, 3, MantissaThreshold(0.8));
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FillPlane_Omp(benchmark::State& state) {
  SetThreads(state);
  Planes p(state.range(0));
  const CounterRng rng(1);
  for (auto _ : state) {
    kernels::FillPlane(p.a, p.n, rng, 3, MantissaThreshold(0.8));
    benchmark::ClobberMemory();
  }
  Finish(state);
}

void BM_Cnot_Reference(benchmark::State& state) {
  Planes p(state.range(0));
  for (auto _ : state) {
    kernels::reference::Cnot(p.a, p.b, p.n);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Cnot_Omp(benchmark::State& state) {
  SetThreads(state);
  Planes p(state.range(0));
  for (auto _ : state) {
    kernels::Cnot(p.a, p.b);
    benchmark::ClobberMemory();
  }
  Finish(state);
}

void BM_Fredkin_Reference(benchmark::State& state) {
  Planes p(state.range(0));
  for (auto _ : state) {
    kernels::reference::Fredkin(p.a, p.b, p.c, p.n);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Fredkin_Omp(benchmark::State& state) {
  SetThreads(state);
  Planes p(state.range(0));
  for (auto _ : state) {
    kernels::Fredkin(p.a, p.b, p.c);
    benchmark::ClobberMemory();
  }
  Finish(state);
}

void BM_BoostTrio_Reference(benchmark::State& state) {
  Planes p(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::reference::BoostTrio(p.a, p.b, p.c, p.n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BoostTrio_Omp(benchmark::State& state) {
  SetThreads(state);
  Planes p(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::BoostTrio(p.a, p.b, p.c, p.oa, p.ob, p.oc, p.n));
  }
  Finish(state);
}

void BM_CountZeros_Reference(benchmark::State& state) {
  Planes p(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::reference::CountZeros(p.a, p.n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CountZeros_Omp(benchmark::State& state) {
  SetThreads(state);
  Planes p(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::CountZeros(p.a, p.n));
  }
  Finish(state);
}

void ReferenceSizes(benchmark::internal::Benchmark* b) {
  b->Arg(1 << 16)->Arg(5000000)->Unit(benchmark::kMicrosecond);
}

void OmpSizes(benchmark::internal::Benchmark* b) {
  for (int64_t n : {int64_t{1} << 16, int64_t{5000000}}) {
    for (int64_t t : {1, 2, 4}) b->Args({n, t});
  }
  b->ArgNames({"molecules", "threads"})->Unit(benchmark::kMicrosecond);
  b->UseRealTime();
}

BENCHMARK(BM_FillPlane_Reference)->Apply(ReferenceSizes);
BENCHMARK(BM_FillPlane_Omp)->Apply(OmpSizes);
BENCHMARK(BM_Cnot_Reference)->Apply(ReferenceSizes);
BENCHMARK(BM_Cnot_Omp)->Apply(OmpSizes);
BENCHMARK(BM_Fredkin_Reference)->Apply(ReferenceSizes);
BENCHMARK(BM_Fredkin_Omp)->Apply(OmpSizes);
BENCHMARK(BM_BoostTrio_Reference)->Apply(ReferenceSizes);
BENCHMARK(BM_BoostTrio_Omp)->Apply(OmpSizes);
BENCHMARK(BM_CountZeros_Reference)->Apply(ReferenceSizes);
BENCHMARK(BM_CountZeros_Omp)->Apply(OmpSizes);

}  // namespace

BENCHMARK_MAIN();
