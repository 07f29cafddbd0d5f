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

// Automatic design of an initialization circuit from a virtual molecular
// ensemble.
//
// Each step walks a table of qubits sorted by decreasing bias, starting at
// the first qubit that is not yet cold, and boosts consecutive trios
// (tbl[j], tbl[j+1], tbl[j+2]). A boost is kept, and its gates emitted,
// only if it strictly raises the measured bias of the trio's top qubit;
// otherwise the three planes are restored. The table is re-sorted after
// every step. Generation stops after `stagnation_window` steps without a
// new cold qubit, or at `max_depth` steps. Finally the longest prefix of
// the sorted table whose all-zero probability exceeds `joint_target` is
// picked as the cold block.

#ifndef BOOSTSIM_GENERATOR_H_
#define BOOSTSIM_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boostsim/circuit.h"
#include "boostsim/ensemble.h"

namespace boostsim {

struct GeneratorConfig {
  double eps_cold = 0.99;
  int stagnation_window = 5;
  int max_depth = 100;
  double joint_target = 0.9;
  // Keeps this qubit in the boosted role of any trio it joins.
  std::optional<Qubit> target;
  // Record the full bias vector of every step.
  bool record_biases = false;

  void Validate() const;
};

// s_t = 5 + floor(n / 10).
int DefaultStagnationWindow(int n);

// Defaults for an ensemble: eps_cold from the von Neumann entropy of the
// initial biases, s_t from n.
GeneratorConfig DefaultGeneratorConfig(std::span<const double> initial_biases);

struct TraceStep {
  int depth = 0;
  double effective_entropy = 0.0;
  int cold_count = 0;
  int kept_trios = 0;
  int undone_trios = 0;
  std::vector<double> biases;  // only with record_biases
};

struct ColdBlock {
  std::vector<Qubit> qubits;
  double joint_probability = 1.0;
  int size() const { return static_cast<int>(qubits.size()); }
};

struct GenerationResult {
  Circuit circuit;
  // Step 0 is the initial state; steps 1.. follow each depth step.
  std::vector<TraceStep> trace;
  ColdBlock cold_block;
  std::vector<double> final_biases;
  double final_effective_entropy = 0.0;
  int depth = 0;
};

struct TrioOutcome {
  bool kept = false;
  bool inverted_b = false;
  Circuit gates;  // the gates applied, empty if undone
};

// Boosts one trio in place. Applies basic boost (a), and (b) as well when
// the bias of b turned negative. The boost is undone unless the bias of a
// strictly increased.
TrioOutcome BoostTrio(MolecularEnsemble& ens, Qubit a, Qubit b, Qubit c);

// Number of qubits with bias strictly above eps_cold.
int ColdCount(std::span<const double> biases, double eps_cold);

// Qubits sorted by decreasing bias, ties by ascending index.
std::vector<Qubit> SortedTable(std::span<const double> biases);

// Longest prefix of `table` whose all-zero probability exceeds target.
ColdBlock PickColdBlock(const MolecularEnsemble& ens,
                        std::span<const Qubit> table, double target);

GenerationResult Generate(MolecularEnsemble& ens, const GeneratorConfig& cfg);

}  // namespace boostsim

#endif  // BOOSTSIM_GENERATOR_H_
