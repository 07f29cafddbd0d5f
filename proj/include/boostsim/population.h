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

// Exact simulation of diagonal density matrices. Boost circuits only
// permute computational-basis populations, so a state is a vector of 2^n
// probabilities and every gate is a permutation of it.

#ifndef BOOSTSIM_POPULATION_H_
#define BOOSTSIM_POPULATION_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "boostsim/circuit.h"

namespace boostsim {

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kDefaultMaxExactQubits = 20;

// Populations c_k of the basis states |k>. Qubit 1 is the most significant
// bit of k, so k = 0b100 over three qubits is |1_1 0_2 0_3>.
class PopulationVector {
 public:
  PopulationVector() = default;
  // Validates nonnegativity and normalization (|sum - 1| <= 1e-10).
  PopulationVector(int qubits, std::vector<double> populations);

  static PopulationVector Product(std::span<const double> biases,
                                  int max_qubits = kDefaultMaxExactQubits);
  static PopulationVector Basis(int qubits, uint64_t k);

  int num_qubits() const { return qubits_; }
  std::span<const double> populations() const { return c_; }
  double operator[](uint64_t k) const { return c_[k]; }

  uint64_t Mask(Qubit q) const { return uint64_t{1} << (qubits_ - q); }

  void Apply(const Gate& gate);
  void Apply(const Circuit& circuit);

 private:
  int qubits_ = 0;
  std::vector<double> c_;
};

PopulationVector ApplyCircuitExact(PopulationVector state,
                                   const Circuit& circuit);

struct QubitMarginal {
  double p_zero = 1.0;
  double bias = 1.0;            // superficial: 2 P - 1
  double intrinsic_bias = 1.0;  // eigenvalue gap of the reduced state
  double entropy = 0.0;         // bits
};

QubitMarginal Marginal(const PopulationVector& state, Qubit q);
std::vector<QubitMarginal> Marginals(const PopulationVector& state);

struct EntropyReport {
  double von_neumann = 0.0;        // S
  double effective = 0.0;          // S_e
  double total_correlation = 0.0;  // S_e - S
};

// Throws std::invalid_argument if the populations are not normalized.
EntropyReport Entropies(const PopulationVector& state);

// sum_k c_k log2(c_k / prod_i marg_i(k)), the relative entropy of the state
// with respect to the product of its one-qubit reduced states.
double RelativeEntropyToMarginals(const PopulationVector& state);

double JointZeroProbabilityExact(const PopulationVector& state,
                                 std::span<const Qubit> qubits);

// Probability that both qubits are 0.
double PairZeroProbability(const PopulationVector& state, Qubit i, Qubit j);

}  // namespace boostsim

#endif  // BOOSTSIM_POPULATION_H_
