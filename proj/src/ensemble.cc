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

#include "boostsim/ensemble.h"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace boostsim {

namespace {

constexpr char kMagic[4] = {'B', 'S', 'E', 'N'};
constexpr uint32_t kDumpVersion = 1;

template <typename T>
void WriteLe(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<unsigned char>(value >> (8 * i));
  }
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T ReadLe(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) {
    throw std::runtime_error("truncated ensemble dump");
  }
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(bytes[i]) << (8 * i);
  }
  return value;
}

}  // namespace

MolecularEnsemble::MolecularEnsemble(int qubits, std::size_t molecules)
    : molecules_(molecules), words_(WordsFor(molecules)) {
  if (molecules == 0) {
    throw std::invalid_argument("an ensemble needs at least one molecule");
  }
  if (qubits < 0) throw std::invalid_argument("negative qubit count");
  planes_.assign(static_cast<std::size_t>(qubits), Plane(words_, 0));
}

MolecularEnsemble MolecularEnsemble::Create(std::span<const double> biases,
                                            std::size_t molecules,
                                            uint64_t seed) {
  for (std::size_t i = 0; i < biases.size(); ++i) {
    if (!(std::abs(biases[i]) <= 1.0)) {
      throw std::invalid_argument("bias of qubit " + std::to_string(i + 1) +
                                  " outside [-1, 1]");
    }
  }
  MolecularEnsemble ens(static_cast<int>(biases.size()), molecules);
  ens.seed_ = seed;
  const CounterRng rng(seed);
  for (std::size_t i = 0; i < biases.size(); ++i) {
    const uint64_t threshold = MantissaThreshold((1.0 + biases[i]) / 2.0);
    kernels::FillPlane(ens.planes_[i], molecules, rng,
                       static_cast<uint32_t>(i), threshold);
  }
  return ens;
}

void MolecularEnsemble::CheckQubit(Qubit q) const {
  if (q < 1 || q > num_qubits()) {
    throw WidthError("qubit " + std::to_string(q) + " outside 1.." +
                     std::to_string(num_qubits()));
  }
}

ConstPlaneSpan MolecularEnsemble::plane(Qubit q) const {
  CheckQubit(q);
  return planes_[q - 1];
}

void MolecularEnsemble::Apply(const Gate& gate) {
  ValidateGate(gate, num_qubits());
  switch (gate.kind) {
    case GateKind::kNot:
      kernels::Not(planes_[gate.q[0] - 1], molecules_);
      break;
    case GateKind::kCnot:
      kernels::Cnot(planes_[gate.q[0] - 1], planes_[gate.q[1] - 1]);
      break;
    case GateKind::kFredkin:
      kernels::Fredkin(planes_[gate.q[0] - 1], planes_[gate.q[1] - 1],
                       planes_[gate.q[2] - 1]);
      break;
  }
}

void MolecularEnsemble::Apply(const Circuit& circuit) {
  if (circuit.width() > num_qubits()) {
    throw WidthError("circuit width " + std::to_string(circuit.width()) +
                     " exceeds ensemble width " +
                     std::to_string(num_qubits()));
  }
  for (const Gate& g : circuit.gates()) Apply(g);
}

uint64_t MolecularEnsemble::ZeroCount(Qubit q) const {
  CheckQubit(q);
  return kernels::CountZeros(planes_[q - 1], molecules_);
}

double MolecularEnsemble::Bias(Qubit q) const {
  return 2.0 * static_cast<double>(ZeroCount(q)) /
             static_cast<double>(molecules_) -
         1.0;
}

std::vector<double> MolecularEnsemble::Biases() const {
  std::vector<double> out(planes_.size());
  for (int q = 1; q <= num_qubits(); ++q) out[q - 1] = Bias(q);
  return out;
}

std::vector<uint64_t> MolecularEnsemble::ZeroCounts() const {
  std::vector<uint64_t> out(planes_.size());
  for (int q = 1; q <= num_qubits(); ++q) out[q - 1] = ZeroCount(q);
  return out;
}

uint64_t MolecularEnsemble::JointZeroCount(
    std::span<const Qubit> qubits) const {
  if (qubits.empty()) return molecules_;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    CheckQubit(qubits[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument("repeated qubit in joint probability");
      }
    }
  }
  Plane acc(words_, 0);
  uint64_t zeros = molecules_;
  for (Qubit q : qubits) {
    zeros = kernels::OrAccumulate(acc, planes_[q - 1], molecules_);
  }
  return zeros;
}

double MolecularEnsemble::JointZeroProbability(
    std::span<const Qubit> qubits) const {
  return static_cast<double>(JointZeroCount(qubits)) /
         static_cast<double>(molecules_);
}

PlaneSnapshot MolecularEnsemble::Snapshot(std::span<const Qubit> qubits) const {
  PlaneSnapshot snap;
  snap.width_ = num_qubits();
  snap.molecules_ = molecules_;
  for (Qubit q : qubits) {
    CheckQubit(q);
    snap.qubits_.push_back(q);
    snap.planes_.push_back(planes_[q - 1]);
  }
  return snap;
}

void MolecularEnsemble::Restore(PlaneSnapshot&& snapshot) {
  if (snapshot.width_ != num_qubits() || snapshot.molecules_ != molecules_) {
    throw SnapshotMismatch("snapshot taken from a differently shaped ensemble");
  }
  for (std::size_t k = 0; k < snapshot.qubits_.size(); ++k) {
    Plane& live = planes_[snapshot.qubits_[k] - 1];
    live.swap(snapshot.planes_[k]);
    spare_.push_back(std::move(snapshot.planes_[k]));
  }
  snapshot.qubits_.clear();
  snapshot.planes_.clear();
}

void MolecularEnsemble::Release(PlaneSnapshot&& snapshot) {
  for (Plane& p : snapshot.planes_) {
    if (p.size() == words_) spare_.push_back(std::move(p));
  }
  snapshot.qubits_.clear();
  snapshot.planes_.clear();
}

Plane MolecularEnsemble::TakeBuffer() {
  if (spare_.empty()) return Plane(words_);
  Plane p = std::move(spare_.back());
  spare_.pop_back();
  return p;
}

MolecularEnsemble::BoostResult MolecularEnsemble::ApplyBoostA(Qubit a, Qubit b,
                                                              Qubit c) {
  ValidateGate(Gate::Fredkin(a, b, c), num_qubits());
  Plane out_a = TakeBuffer();
  Plane out_b = TakeBuffer();
  Plane out_c = TakeBuffer();
  BoostResult result;
  result.zeros =
      kernels::BoostTrio(planes_[a - 1], planes_[b - 1], planes_[c - 1], out_a,
                         out_b, out_c, molecules_);
  planes_[a - 1].swap(out_a);
  planes_[b - 1].swap(out_b);
  planes_[c - 1].swap(out_c);
  result.before.width_ = num_qubits();
  result.before.molecules_ = molecules_;
  result.before.qubits_ = {a, b, c};
  result.before.planes_.push_back(std::move(out_a));
  result.before.planes_.push_back(std::move(out_b));
  result.before.planes_.push_back(std::move(out_c));
  return result;
}

bool MolecularEnsemble::Bit(std::size_t m, Qubit q) const {
  CheckQubit(q);
  if (m >= molecules_) throw std::out_of_range("molecule index");
  return (planes_[q - 1][m / kWordBits] >> (m % kWordBits)) & 1u;
}

void MolecularEnsemble::SetBit(std::size_t m, Qubit q, bool value) {
  CheckQubit(q);
  if (m >= molecules_) throw std::out_of_range("molecule index");
  Word& w = planes_[q - 1][m / kWordBits];
  const Word bit = Word{1} << (m % kWordBits);
  w = value ? (w | bit) : (w & ~bit);
}

uint64_t MolecularEnsemble::Row(std::size_t m) const {
  if (num_qubits() > 64) throw WidthError("rows limited to 64 qubits");
  uint64_t row = 0;
  for (int q = 1; q <= num_qubits(); ++q) {
    row |= static_cast<uint64_t>(Bit(m, q)) << (q - 1);
  }
  return row;
}

void MolecularEnsemble::Dump(std::ostream& out) const {
  out.write(kMagic, 4);
  WriteLe<uint32_t>(out, kDumpVersion);
  WriteLe<uint32_t>(out, static_cast<uint32_t>(num_qubits()));
  WriteLe<uint64_t>(out, molecules_);
  WriteLe<uint64_t>(out, seed_);
  for (const Plane& p : planes_) {
    for (Word w : p) WriteLe<uint64_t>(out, w);
  }
}

MolecularEnsemble MolecularEnsemble::Load(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::string(magic, 4) != std::string(kMagic, 4)) {
    throw std::runtime_error("not an ensemble dump");
  }
  if (ReadLe<uint32_t>(in) != kDumpVersion) {
    throw std::runtime_error("unsupported ensemble dump version");
  }
  const auto n = ReadLe<uint32_t>(in);
  const auto molecules = ReadLe<uint64_t>(in);
  MolecularEnsemble ens(static_cast<int>(n), molecules);
  ens.seed_ = ReadLe<uint64_t>(in);
  for (Plane& p : ens.planes_) {
    for (Word& w : p) w = ReadLe<uint64_t>(in);
  }
  return ens;
}

bool operator==(const MolecularEnsemble& a, const MolecularEnsemble& b) {
  return a.molecules_ == b.molecules_ && a.planes_ == b.planes_;
}

}  // namespace boostsim
