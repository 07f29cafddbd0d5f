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

#include "boostsim/plane_kernels.h"

#include <omp.h>

#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>

namespace boostsim {

namespace {

std::atomic<int> g_threads{0};

// Below this many words the fork/join costs more than the loop.
constexpr std::ptrdiff_t kParallelWords = 1 << 12;

int Threads() {
  const int t = g_threads.load(std::memory_order_relaxed);
  return t > 0 ? t : omp_get_max_threads();
}

}  // namespace

void SetKernelThreads(int threads) {
  g_threads.store(threads < 0 ? 0 : threads, std::memory_order_relaxed);
}

int KernelThreads() { return Threads(); }

uint64_t MantissaThreshold(double p) {
  if (!(p > 0.0)) return 0;
  if (p >= 1.0) return uint64_t{1} << 53;
  return static_cast<uint64_t>(std::ceil(std::ldexp(p, 53)));
}

namespace kernels {

void FillPlane(PlaneSpan plane, std::size_t molecules, const CounterRng& rng,
               uint32_t qubit, uint64_t zero_threshold) {
  const auto words = static_cast<std::ptrdiff_t>(plane.size());
  const std::size_t full = molecules / kWordBits;
#pragma omp parallel for schedule(static) num_threads(Threads()) \
    if (words >= kParallelWords / 16)
  for (std::ptrdiff_t w = 0; w < words; ++w) {
    const std::size_t base = static_cast<std::size_t>(w) * kWordBits;
    const std::size_t bits =
        static_cast<std::size_t>(w) < full ? kWordBits : molecules - base;
    Word word = 0;
    for (std::size_t k = 0; k < bits; ++k) {
      const Word one = rng.Mantissa(base + k, qubit) >= zero_threshold;
      word |= one << k;
    }
    plane[w] = word;
  }
}

void Not(PlaneSpan target, std::size_t molecules) {
  const auto words = static_cast<std::ptrdiff_t>(target.size());
#pragma omp parallel for schedule(static) num_threads(Threads()) \
    if (words >= kParallelWords)
  for (std::ptrdiff_t w = 0; w < words; ++w) target[w] = ~target[w];
  if (words > 0) target[words - 1] &= TailMask(molecules);
}

void Cnot(ConstPlaneSpan control, PlaneSpan target) {
  const auto words = static_cast<std::ptrdiff_t>(target.size());
#pragma omp parallel for schedule(static) num_threads(Threads()) \
    if (words >= kParallelWords)
  for (std::ptrdiff_t w = 0; w < words; ++w) target[w] ^= control[w];
}

void Fredkin(PlaneSpan swap_a, PlaneSpan swap_b, ConstPlaneSpan control) {
  const auto words = static_cast<std::ptrdiff_t>(swap_a.size());
#pragma omp parallel for schedule(static) num_threads(Threads()) \
    if (words >= kParallelWords)
  for (std::ptrdiff_t w = 0; w < words; ++w) {
    const Word t = (swap_a[w] ^ swap_b[w]) & control[w];
    swap_a[w] ^= t;
    swap_b[w] ^= t;
  }
}

TrioZeros BoostTrio(ConstPlaneSpan a, ConstPlaneSpan b, ConstPlaneSpan c,
                    PlaneSpan out_a, PlaneSpan out_b, PlaneSpan out_c,
                    std::size_t molecules) {
  const auto words = static_cast<std::ptrdiff_t>(a.size());
  uint64_t ones_a = 0;
  uint64_t ones_b = 0;
  uint64_t ones_c = 0;
  // CN(b,c) leaves c^b; the two X(c) cancel around the Fredkin, whose
  // control is therefore ~(b^c). Padding stays zero: b^c = 0, t = 0.
#pragma omp parallel for schedule(static) num_threads(Threads()) \
    reduction(+ : ones_a, ones_b, ones_c) if (words >= kParallelWords)
  for (std::ptrdiff_t w = 0; w < words; ++w) {
    const Word xa = a[w];
    const Word xb = b[w];
    const Word bc = xb ^ c[w];
    const Word t = (xa ^ xb) & ~bc;
    const Word na = xa ^ t;
    const Word nb = xb ^ t;
    out_a[w] = na;
    out_b[w] = nb;
    out_c[w] = bc;
    ones_a += std::popcount(na);
    ones_b += std::popcount(nb);
    ones_c += std::popcount(bc);
  }
  return {molecules - ones_a, molecules - ones_b, molecules - ones_c};
}

uint64_t CountOnes(ConstPlaneSpan plane) {
  const auto words = static_cast<std::ptrdiff_t>(plane.size());
  uint64_t ones = 0;
#pragma omp parallel for schedule(static) num_threads(Threads()) \
    reduction(+ : ones) if (words >= kParallelWords)
  for (std::ptrdiff_t w = 0; w < words; ++w) ones += std::popcount(plane[w]);
  return ones;
}

uint64_t CountZeros(ConstPlaneSpan plane, std::size_t molecules) {
  return molecules - CountOnes(plane);
}

uint64_t OrAccumulate(PlaneSpan acc, ConstPlaneSpan plane,
                      std::size_t molecules) {
  const auto words = static_cast<std::ptrdiff_t>(acc.size());
  uint64_t ones = 0;
#pragma omp parallel for schedule(static) num_threads(Threads()) \
    reduction(+ : ones) if (words >= kParallelWords)
  for (std::ptrdiff_t w = 0; w < words; ++w) {
    acc[w] |= plane[w];
    ones += std::popcount(acc[w]);
  }
  return molecules - ones;
}

void Copy(ConstPlaneSpan from, PlaneSpan to) {
  if (!from.empty()) std::memcpy(to.data(), from.data(), from.size_bytes());
}

namespace reference {
namespace {

bool Get(ConstPlaneSpan p, std::size_t m) {
  return (p[m / kWordBits] >> (m % kWordBits)) & 1u;
}

void Put(PlaneSpan p, std::size_t m, bool v) {
  const Word bit = Word{1} << (m % kWordBits);
  if (v) {
    p[m / kWordBits] |= bit;
  } else {
    p[m / kWordBits] &= ~bit;
  }
}

}  // namespace

void FillPlane(PlaneSpan plane, std::size_t molecules, const CounterRng& rng,
               uint32_t qubit, uint64_t zero_threshold) {
  for (Word& w : plane) w = 0;
  for (std::size_t m = 0; m < molecules; ++m) {
    Put(plane, m, rng.Mantissa(m, qubit) >= zero_threshold);
  }
}

void Not(PlaneSpan target, std::size_t molecules) {
  for (std::size_t m = 0; m < molecules; ++m) Put(target, m, !Get(target, m));
}

void Cnot(ConstPlaneSpan control, PlaneSpan target, std::size_t molecules) {
  for (std::size_t m = 0; m < molecules; ++m) {
    if (Get(control, m)) Put(target, m, !Get(target, m));
  }
}

void Fredkin(PlaneSpan swap_a, PlaneSpan swap_b, ConstPlaneSpan control,
             std::size_t molecules) {
  for (std::size_t m = 0; m < molecules; ++m) {
    if (!Get(control, m)) continue;
    const bool x = Get(swap_a, m);
    Put(swap_a, m, Get(swap_b, m));
    Put(swap_b, m, x);
  }
}

TrioZeros BoostTrio(PlaneSpan a, PlaneSpan b, PlaneSpan c,
                    std::size_t molecules) {
  Cnot(b, c, molecules);
  Not(c, molecules);
  Fredkin(a, b, c, molecules);
  Not(c, molecules);
  return {CountZeros(a, molecules), CountZeros(b, molecules),
          CountZeros(c, molecules)};
}

uint64_t CountZeros(ConstPlaneSpan plane, std::size_t molecules) {
  uint64_t zeros = 0;
  for (std::size_t m = 0; m < molecules; ++m) zeros += !Get(plane, m);
  return zeros;
}

}  // namespace reference
}  // namespace kernels
}  // namespace boostsim
