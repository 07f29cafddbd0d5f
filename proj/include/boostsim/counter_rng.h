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

#ifndef BOOSTSIM_COUNTER_RNG_H_
#define BOOSTSIM_COUNTER_RNG_H_

#include <cstdint>

namespace boostsim {

// Counter-based uniform draws keyed by (seed, molecule, qubit).
//
// The draw for (m, i) is SplitMix64 evaluated at stream position
// (m << 32 | i) of the stream whose state is mix(seed): the Weyl increment
// 0x9e3779b97f4a7c15 times the counter is added to the keyed state and
// passed through the SplitMix64 finalizer. Results do not depend on the
// order in which draws are made, so initialization can be split across
// threads freely.
class CounterRng {
 public:
  static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  static constexpr uint64_t Mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  explicit constexpr CounterRng(uint64_t seed) : key_(Mix(seed ^ kGolden)) {}

  // Molecule and qubit indices are 0-based and must fit in 32 bits.
  constexpr uint64_t Bits(uint64_t molecule, uint32_t qubit) const {
    const uint64_t counter = (molecule << 32) | qubit;
    return Mix(key_ + (counter + 1) * kGolden);
  }

  // 53-bit mantissa in [0, 1).
  constexpr uint64_t Mantissa(uint64_t molecule, uint32_t qubit) const {
    return Bits(molecule, qubit) >> 11;
  }

  double Uniform(uint64_t molecule, uint32_t qubit) const {
    return static_cast<double>(Mantissa(molecule, qubit)) * 0x1.0p-53;
  }

 private:
  uint64_t key_;
};

// Smallest 53-bit mantissa threshold t with  u < p  <=>  mantissa < t for
// every u = mantissa * 2^-53. p is clamped to [0, 1].
uint64_t MantissaThreshold(double p);

}  // namespace boostsim

#endif  // BOOSTSIM_COUNTER_RNG_H_
