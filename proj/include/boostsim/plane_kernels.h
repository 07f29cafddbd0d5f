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

// Word kernels over bit planes. A plane holds one bit per molecule, bit m
// of the plane at word m / 64, position m % 64. Bits past the molecule
// count in the final word are padding and must stay zero.
//
// Two implementations share this interface:
//
//   boostsim::kernels            word-parallel, OpenMP over word ranges
//   boostsim::kernels::reference molecule-at-a-time loops, kept as the
//                                 oracle for tests and the benchmark
//
// Both give bit-identical planes and exact integer counts.

#ifndef BOOSTSIM_PLANE_KERNELS_H_
#define BOOSTSIM_PLANE_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "boostsim/counter_rng.h"

namespace boostsim {

using Word = uint64_t;
using PlaneSpan = std::span<Word>;
using ConstPlaneSpan = std::span<const Word>;

constexpr std::size_t kWordBits = 64;

constexpr std::size_t WordsFor(std::size_t molecules) {
  return (molecules + kWordBits - 1) / kWordBits;
}

// Mask of the valid bits in the final word.
constexpr Word TailMask(std::size_t molecules) {
  const std::size_t r = molecules % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

// Zero counts of a boosted trio, measured after the boost.
struct TrioZeros {
  uint64_t a = 0;
  uint64_t b = 0;
  uint64_t c = 0;
};

namespace kernels {

// Fills plane bit m with 0 iff the draw for (m, qubit) is below the
// threshold from MantissaThreshold((1 + bias) / 2).
void FillPlane(PlaneSpan plane, std::size_t molecules, const CounterRng& rng,
               uint32_t qubit, uint64_t zero_threshold);

void Not(PlaneSpan target, std::size_t molecules);
void Cnot(ConstPlaneSpan control, PlaneSpan target);
void Fredkin(PlaneSpan swap_a, PlaneSpan swap_b, ConstPlaneSpan control);

// Basic boost (a) fused into one pass, written out of place. Inputs and
// outputs must not alias. Returns the zero counts of the outputs.
TrioZeros BoostTrio(ConstPlaneSpan a, ConstPlaneSpan b, ConstPlaneSpan c,
                    PlaneSpan out_a, PlaneSpan out_b, PlaneSpan out_c,
                    std::size_t molecules);

uint64_t CountOnes(ConstPlaneSpan plane);
uint64_t CountZeros(ConstPlaneSpan plane, std::size_t molecules);

// acc |= plane; returns the number of molecules whose acc bit is 0.
uint64_t OrAccumulate(PlaneSpan acc, ConstPlaneSpan plane,
                      std::size_t molecules);

void Copy(ConstPlaneSpan from, PlaneSpan to);

namespace reference {

void FillPlane(PlaneSpan plane, std::size_t molecules, const CounterRng& rng,
               uint32_t qubit, uint64_t zero_threshold);
void Not(PlaneSpan target, std::size_t molecules);
void Cnot(ConstPlaneSpan control, PlaneSpan target, std::size_t molecules);
void Fredkin(PlaneSpan swap_a, PlaneSpan swap_b, ConstPlaneSpan control,
             std::size_t molecules);
// Gate-by-gate CN(b,c);X(c);Fr(a b, c);X(c), in place.
TrioZeros BoostTrio(PlaneSpan a, PlaneSpan b, PlaneSpan c,
                    std::size_t molecules);
uint64_t CountZeros(ConstPlaneSpan plane, std::size_t molecules);

}  // namespace reference
}  // namespace kernels

// Threads used by the word kernels; 0 restores the OpenMP default.
void SetKernelThreads(int threads);
int KernelThreads();

}  // namespace boostsim

#endif  // BOOSTSIM_PLANE_KERNELS_H_
