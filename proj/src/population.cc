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

#include "boostsim/population.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "boostsim/analytics.h"

namespace boostsim {

namespace {

constexpr double kNormTolerance = 1e-10;

double Sum(std::span<const double> c) {
  // Pairwise summation keeps the error at O(log n) ulps for 2^20 terms.
  if (c.size() <= 8) {
    double s = 0.0;
    for (double x : c) s += x;
    return s;
  }
  const std::size_t half = c.size() / 2;
  return Sum(c.first(half)) + Sum(c.subspan(half));
}

// Swaps c[k] and c[k ^ flip] for every k with (k & select) == want.
// Pairs are disjoint as long as the flip clears a bit that `want` sets.
void SwapPairs(std::vector<double>& c, uint64_t select, uint64_t want,
               uint64_t flip) {
  const auto size = static_cast<std::ptrdiff_t>(c.size());
#pragma omp parallel for schedule(static) if (size >= (1 << 16))
  for (std::ptrdiff_t k = 0; k < size; ++k) {
    const auto u = static_cast<uint64_t>(k);
    if ((u & select) == want) std::swap(c[u], c[u ^ flip]);
  }
}

}  // namespace

PopulationVector::PopulationVector(int qubits, std::vector<double> populations)
    : qubits_(qubits), c_(std::move(populations)) {
  if (qubits < 0 || qubits > 62) {
    throw CapacityError("unsupported qubit count " + std::to_string(qubits));
  }
  if (c_.size() != (std::size_t{1} << qubits)) {
    throw std::invalid_argument("population vector must have 2^n entries");
  }
  for (double x : c_) {
    if (!(x >= 0.0)) throw std::invalid_argument("negative population");
  }
  if (std::abs(Sum(c_) - 1.0) > kNormTolerance) {
    throw std::invalid_argument("populations do not sum to 1");
  }
}

PopulationVector PopulationVector::Product(std::span<const double> biases,
                                           int max_qubits) {
  const int n = static_cast<int>(biases.size());
  if (n > max_qubits) {
    throw CapacityError("exact simulation limited to " +
                        std::to_string(max_qubits) + " qubits, got " +
                        std::to_string(n));
  }
  for (double e : biases) {
    if (!(std::abs(e) <= 1.0)) throw std::invalid_argument("bias outside [-1, 1]");
  }
  // Built qubit by qubit: appending qubit i doubles the vector, the new
  // bit becoming the least significant one.
  std::vector<double> c{1.0};
  for (double e : biases) {
    const double p0 = (1.0 + e) / 2.0;
    const double p1 = (1.0 - e) / 2.0;
    std::vector<double> next(c.size() * 2);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[2 * k] = c[k] * p0;
      next[2 * k + 1] = c[k] * p1;
    }
    c = std::move(next);
  }
  PopulationVector out;
  out.qubits_ = n;
  out.c_ = std::move(c);
  return out;
}

PopulationVector PopulationVector::Basis(int qubits, uint64_t k) {
  if (qubits > kDefaultMaxExactQubits) {
    throw CapacityError("basis state too wide");
  }
  std::vector<double> c(std::size_t{1} << qubits, 0.0);
  if (k >= c.size()) throw std::out_of_range("basis index");
  c[k] = 1.0;
  return PopulationVector(qubits, std::move(c));
}

void PopulationVector::Apply(const Gate& gate) {
  ValidateGate(gate, qubits_);
  switch (gate.kind) {
    case GateKind::kNot: {
      const uint64_t m = Mask(gate.q[0]);
      SwapPairs(c_, m, 0, m);
      break;
    }
    case GateKind::kCnot: {
      const uint64_t mc = Mask(gate.q[0]);
      const uint64_t mt = Mask(gate.q[1]);
      SwapPairs(c_, mc | mt, mc, mt);
      break;
    }
    case GateKind::kFredkin: {
      const uint64_t ma = Mask(gate.q[0]);
      const uint64_t mb = Mask(gate.q[1]);
      const uint64_t mc = Mask(gate.q[2]);
      SwapPairs(c_, ma | mb | mc, ma | mc, ma | mb);
      break;
    }
  }
}

void PopulationVector::Apply(const Circuit& circuit) {
  if (circuit.width() != qubits_) {
    throw WidthError("circuit width " + std::to_string(circuit.width()) +
                     " does not match state width " +
                     std::to_string(qubits_));
  }
  for (const Gate& g : circuit.gates()) Apply(g);
}

PopulationVector ApplyCircuitExact(PopulationVector state,
                                   const Circuit& circuit) {
  state.Apply(circuit);
  return state;
}

QubitMarginal Marginal(const PopulationVector& state, Qubit q) {
  if (q < 1 || q > state.num_qubits()) {
    throw WidthError("qubit " + std::to_string(q) + " outside state");
  }
  const uint64_t mask = state.Mask(q);
  const auto c = state.populations();
  double p0 = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if ((k & mask) == 0) p0 += c[k];
  }
  // The reduced state is diag(p0, 1 - p0); its sorted eigenvalue gap is
  // |2 p0 - 1|.
  QubitMarginal m;
  m.p_zero = p0;
  m.bias = std::clamp(2.0 * p0 - 1.0, -1.0, 1.0);
  m.intrinsic_bias = std::abs(m.bias);
  m.entropy = BinaryEntropy(m.intrinsic_bias);
  return m;
}

std::vector<QubitMarginal> Marginals(const PopulationVector& state) {
  std::vector<QubitMarginal> out;
  out.reserve(state.num_qubits());
  for (int q = 1; q <= state.num_qubits(); ++q) out.push_back(Marginal(state, q));
  return out;
}

EntropyReport Entropies(const PopulationVector& state) {
  const auto c = state.populations();
  if (std::abs(Sum(c) - 1.0) > kNormTolerance) {
    throw std::invalid_argument("populations do not sum to 1");
  }
  EntropyReport r;
  for (double x : c) {
    if (x > 0.0) r.von_neumann -= x * std::log2(x);
  }
  for (const QubitMarginal& m : Marginals(state)) r.effective += m.entropy;
  r.total_correlation = r.effective - r.von_neumann;
  return r;
}

double RelativeEntropyToMarginals(const PopulationVector& state) {
  const int n = state.num_qubits();
  std::vector<double> p0(n);
  for (int q = 1; q <= n; ++q) p0[q - 1] = Marginal(state, q).p_zero;
  const auto c = state.populations();
  double d = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] <= 0.0) continue;
    double prod = 1.0;
    for (int q = 1; q <= n; ++q) {
      prod *= (k & state.Mask(q)) ? 1.0 - p0[q - 1] : p0[q - 1];
    }
    d += c[k] * std::log2(c[k] / prod);
  }
  return d;
}

double JointZeroProbabilityExact(const PopulationVector& state,
                                 std::span<const Qubit> qubits) {
  uint64_t mask = 0;
  for (Qubit q : qubits) {
    if (q < 1 || q > state.num_qubits()) {
      throw WidthError("qubit " + std::to_string(q) + " outside state");
    }
    if (mask & state.Mask(q)) {
      throw std::invalid_argument("repeated qubit in joint probability");
    }
    mask |= state.Mask(q);
  }
  const auto c = state.populations();
  double p = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if ((k & mask) == 0) p += c[k];
  }
  return p;
}

double PairZeroProbability(const PopulationVector& state, Qubit i, Qubit j) {
  const Qubit qs[2] = {i, j};
  return JointZeroProbabilityExact(state, qs);
}

}  // namespace boostsim
