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

#include "boostsim/generator.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "boostsim/analytics.h"

namespace boostsim {

namespace {

struct Trial {
  bool kept = false;
  bool inverted_b = false;
  TrioZeros zeros;
};

// Compares zero counts rather than biases: bias = 2 z / N - 1 is monotone
// in z, and the integer comparison is exact.
Trial TryBoost(MolecularEnsemble& ens, Qubit a, Qubit b, Qubit c,
               uint64_t zeros_a_before) {
  const uint64_t molecules = ens.num_molecules();
  auto boosted = ens.ApplyBoostA(a, b, c);
  Trial t;
  t.zeros = boosted.zeros;
  if (2 * t.zeros.b < molecules) {
    ens.Apply(Gate::Not(b));
    t.zeros.b = molecules - t.zeros.b;
    t.inverted_b = true;
  }
  t.kept = t.zeros.a > zeros_a_before;
  if (t.kept) {
    ens.Release(std::move(boosted.before));
  } else {
    ens.Restore(std::move(boosted.before));
  }
  return t;
}

double BiasFromZeros(uint64_t zeros, uint64_t molecules) {
  return 2.0 * static_cast<double>(zeros) / static_cast<double>(molecules) -
         1.0;
}

}  // namespace

void GeneratorConfig::Validate() const {
  if (!(eps_cold >= 0.0 && eps_cold < 1.0)) {
    throw std::invalid_argument("eps_cold must lie in [0, 1)");
  }
  if (stagnation_window < 1) {
    throw std::invalid_argument("stagnation window must be at least 1");
  }
  if (max_depth < 1) throw std::invalid_argument("max depth must be at least 1");
  if (!(joint_target > 0.0 && joint_target <= 1.0)) {
    throw std::invalid_argument("joint target must lie in (0, 1]");
  }
}

int DefaultStagnationWindow(int n) { return 5 + n / 10; }

GeneratorConfig DefaultGeneratorConfig(std::span<const double> initial_biases) {
  GeneratorConfig cfg;
  const double n = static_cast<double>(initial_biases.size());
  cfg.eps_cold = DefaultEpsCold(n, EffectiveEntropy(initial_biases));
  cfg.stagnation_window =
      DefaultStagnationWindow(static_cast<int>(initial_biases.size()));
  return cfg;
}

TrioOutcome BoostTrio(MolecularEnsemble& ens, Qubit a, Qubit b, Qubit c) {
  const Trial t = TryBoost(ens, a, b, c, ens.ZeroCount(a));
  TrioOutcome out;
  out.kept = t.kept;
  out.inverted_b = t.inverted_b;
  out.gates = Circuit(ens.num_qubits());
  if (t.kept) {
    AppendBasicBoostA(out.gates, a, b, c);
    if (t.inverted_b) AppendBasicBoostB(out.gates, b);
  }
  return out;
}

int ColdCount(std::span<const double> biases, double eps_cold) {
  return static_cast<int>(std::count_if(
      biases.begin(), biases.end(), [eps_cold](double e) { return e > eps_cold; }));
}

std::vector<Qubit> SortedTable(std::span<const double> biases) {
  std::vector<Qubit> tbl(biases.size());
  std::iota(tbl.begin(), tbl.end(), 1);
  std::stable_sort(tbl.begin(), tbl.end(), [&](Qubit x, Qubit y) {
    return biases[x - 1] > biases[y - 1];
  });
  return tbl;
}

ColdBlock PickColdBlock(const MolecularEnsemble& ens,
                        std::span<const Qubit> table, double target) {
  ColdBlock block;
  const std::size_t molecules = ens.num_molecules();
  Plane acc(ens.words_per_plane(), 0);
  for (Qubit q : table) {
    const uint64_t zeros = kernels::OrAccumulate(acc, ens.plane(q), molecules);
    const double p = static_cast<double>(zeros) / static_cast<double>(molecules);
    if (!(p > target)) break;
    block.qubits.push_back(q);
    block.joint_probability = p;
  }
  return block;
}

GenerationResult Generate(MolecularEnsemble& ens, const GeneratorConfig& cfg) {
  cfg.Validate();
  const int n = ens.num_qubits();
  const uint64_t molecules = ens.num_molecules();
  if (cfg.target && (*cfg.target < 1 || *cfg.target > n)) {
    throw std::invalid_argument("target qubit outside the ensemble");
  }

  std::vector<uint64_t> zeros = ens.ZeroCounts();
  std::vector<double> biases(n);
  auto refresh_biases = [&] {
    for (int i = 0; i < n; ++i) biases[i] = BiasFromZeros(zeros[i], molecules);
  };
  refresh_biases();

  GenerationResult result;
  result.circuit = Circuit(n);
  std::vector<Qubit> tbl = SortedTable(biases);

  auto log_step = [&](int depth, int cold, int kept, int undone) {
    TraceStep s;
    s.depth = depth;
    s.effective_entropy = EffectiveEntropy(biases);
    s.cold_count = cold;
    s.kept_trios = kept;
    s.undone_trios = undone;
    if (cfg.record_biases) s.biases = biases;
    result.trace.push_back(std::move(s));
  };

  int best_cold = ColdCount(biases, cfg.eps_cold);
  int last_new_cold = 0;
  log_step(0, best_cold, 0, 0);

  for (int depth = 1; depth <= cfg.max_depth; ++depth) {
    if ((depth - 1) - last_new_cold >= cfg.stagnation_window) break;

    std::size_t j = 0;
    while (j < tbl.size() && biases[tbl[j] - 1] > cfg.eps_cold) ++j;

    int kept = 0;
    int undone = 0;
    for (; j + 2 < tbl.size(); j += 3) {
      Qubit a = tbl[j];
      Qubit b = tbl[j + 1];
      Qubit c = tbl[j + 2];
      if (cfg.target) {
        if (b == *cfg.target) std::swap(a, b);
        if (c == *cfg.target) std::swap(a, c);
      }
      const Trial t = TryBoost(ens, a, b, c, zeros[a - 1]);
      if (!t.kept) {
        ++undone;
        continue;
      }
      ++kept;
      zeros[a - 1] = t.zeros.a;
      zeros[b - 1] = t.zeros.b;
      zeros[c - 1] = t.zeros.c;
      AppendBasicBoostA(result.circuit, a, b, c);
      if (t.inverted_b) AppendBasicBoostB(result.circuit, b);
    }
    result.circuit.mark_layer();

    refresh_biases();
    tbl = SortedTable(biases);
    const int cold = ColdCount(biases, cfg.eps_cold);
    if (cold > best_cold) {
      best_cold = cold;
      last_new_cold = depth;
    }
    log_step(depth, cold, kept, undone);
    result.depth = depth;
  }

  result.cold_block = PickColdBlock(ens, tbl, cfg.joint_target);
  result.final_biases = biases;
  result.final_effective_entropy = EffectiveEntropy(biases);
  return result;
}

}  // namespace boostsim
