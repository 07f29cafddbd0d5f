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

#ifndef BOOSTSIM_ENSEMBLE_H_
#define BOOSTSIM_ENSEMBLE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <span>
#include <vector>

#include "boostsim/circuit.h"
#include "boostsim/plane_kernels.h"

namespace boostsim {

using Plane = std::vector<Word>;

// Saved copies of some planes of an ensemble. Produced by Snapshot or
// ApplyBoostA and consumed by Restore or Release.
class PlaneSnapshot {
 public:
  PlaneSnapshot() = default;
  PlaneSnapshot(PlaneSnapshot&&) = default;
  PlaneSnapshot& operator=(PlaneSnapshot&&) = default;

  const std::vector<Qubit>& qubits() const { return qubits_; }
  bool empty() const { return qubits_.empty(); }

 private:
  friend class MolecularEnsemble;

  int width_ = 0;
  std::size_t molecules_ = 0;
  std::vector<Qubit> qubits_;
  std::vector<Plane> planes_;
};

class SnapshotMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// N virtual molecules of n spins, stored qubit-major as n bit planes.
// A 1 bit is spin down. The bias of qubit i is 2 * zeros_i / N - 1.
class MolecularEnsemble {
 public:
  // All molecules |0...0>, seed 0.
  MolecularEnsemble(int qubits, std::size_t molecules);

  // Bit (m, i) is 0 iff frand(seed, m, i) < (1 + biases[i]) / 2.
  static MolecularEnsemble Create(std::span<const double> biases,
                                  std::size_t molecules, uint64_t seed);

  int num_qubits() const { return static_cast<int>(planes_.size()); }
  std::size_t num_molecules() const { return molecules_; }
  std::size_t words_per_plane() const { return words_; }
  uint64_t seed() const { return seed_; }

  ConstPlaneSpan plane(Qubit q) const;

  void Apply(const Gate& gate);
  void Apply(const Circuit& circuit);

  uint64_t ZeroCount(Qubit q) const;
  double Bias(Qubit q) const;
  std::vector<double> Biases() const;
  std::vector<uint64_t> ZeroCounts() const;

  // Fraction of molecules whose listed bits are all 0; 1 for an empty list.
  double JointZeroProbability(std::span<const Qubit> qubits) const;
  uint64_t JointZeroCount(std::span<const Qubit> qubits) const;

  // Copies the listed planes.
  PlaneSnapshot Snapshot(std::span<const Qubit> qubits) const;
  // Puts the snapshot planes back, bit-exactly.
  void Restore(PlaneSnapshot&& snapshot);
  // Drops a snapshot, recycling its buffers.
  void Release(PlaneSnapshot&& snapshot);

  // Applies CN(b,c);X(c);Fr(a b, c);X(c) in a single fused pass. The
  // pre-boost planes are moved, not copied, into `before`; Restore(before)
  // undoes the boost.
  struct BoostResult {
    PlaneSnapshot before;
    TrioZeros zeros;
  };
  BoostResult ApplyBoostA(Qubit a, Qubit b, Qubit c);

  // Molecule m is 0-based; qubits are 1-based.
  bool Bit(std::size_t m, Qubit q) const;
  void SetBit(std::size_t m, Qubit q, bool value);
  // Molecule row with qubit i at bit i-1. Requires n <= 64.
  uint64_t Row(std::size_t m) const;

  // Debug dump: "BSEN", version, n, N, seed, then each plane as
  // little-endian 64-bit words.
  void Dump(std::ostream& out) const;
  static MolecularEnsemble Load(std::istream& in);

  friend bool operator==(const MolecularEnsemble& a,
                         const MolecularEnsemble& b);

 private:
  void CheckQubit(Qubit q) const;
  Plane TakeBuffer();

  std::size_t molecules_ = 0;
  std::size_t words_ = 0;
  uint64_t seed_ = 0;
  std::vector<Plane> planes_;
  std::vector<Plane> spare_;
};

}  // namespace boostsim

#endif  // BOOSTSIM_ENSEMBLE_H_
