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

#include <cmath>
#include <vector>

#include "boostsim/analytics.h"
#include "boostsim/circuit_text.h"
#include "boostsim/population.h"
#include "gtest/gtest.h"

namespace boostsim {
namespace {

TEST(ColdCountTest, StrictComparison) {
  const std::vector<double> ones(5, 1.0), zeros(5, 0.0);
  EXPECT_EQ(ColdCount(ones, 0.99), 5);
  EXPECT_EQ(ColdCount(zeros, 0.99), 0);
  const std::vector<double> mixed = {0.995, 0.5, 0.99};
  EXPECT_EQ(ColdCount(mixed, 0.99), 1);
}

TEST(SortedTableTest, DescendingStableTies) {
  const std::vector<double> b = {0.2, 0.9, 0.2, 0.5, 0.9};
  EXPECT_EQ(SortedTable(b), (std::vector<Qubit>{2, 5, 4, 1, 3}));
}

TEST(DefaultsTest, WindowAndThreshold) {
  EXPECT_EQ(DefaultStagnationWindow(7), 5);
  EXPECT_EQ(DefaultStagnationWindow(1000), 105);
  const std::vector<double> b(1000, 0.7);
  const auto cfg = DefaultGeneratorConfig(b);
  EXPECT_EQ(cfg.stagnation_window, 105);
  EXPECT_NEAR(cfg.eps_cold, 2 * std::pow(0.9, 1.0 / 391) - 1, 1e-15);
  EXPECT_GT(cfg.eps_cold, 0.99);
}

TEST(ConfigTest, Validate) {
  GeneratorConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.eps_cold = 1.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = GeneratorConfig{};
  c.stagnation_window = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = GeneratorConfig{};
  c.joint_target = 0.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(BoostTrioTest, KeptWhenPredictedToGrow) {
  const std::vector<double> b = {0.6, 0.6, 0.6};
  auto ens = MolecularEnsemble::Create(b, 1000000, 1);
  const auto out = BoostTrio(ens, 1, 2, 3);
  EXPECT_TRUE(out.kept);
  EXPECT_FALSE(out.inverted_b);
  EXPECT_EQ(out.gates, BasicBoostA(3, 1, 2, 3));
  EXPECT_NEAR(ens.Bias(1), 0.792, 0.005);
}

TEST(BoostTrioTest, UndoneWhenNotGrowing) {
  const std::vector<double> b = {0.9, 0.5, 0.5};
  auto ens = MolecularEnsemble::Create(b, 1000000, 1);
  const auto before = ens;
  const auto out = BoostTrio(ens, 1, 2, 3);
  EXPECT_FALSE(out.kept);
  EXPECT_TRUE(out.gates.empty());
  EXPECT_EQ(ens, before);
}

TEST(BoostTrioTest, NegativeBIsInverted) {
  // a' = (a+b+c-abc)/2 > a, b' = (a+b-c+abc)/2 < 0.
  const std::vector<double> b = {0.1, 0.1, 0.9};
  auto ens = MolecularEnsemble::Create(b, 1000000, 2);
  const auto out = BoostTrio(ens, 1, 2, 3);
  ASSERT_TRUE(out.kept);
  EXPECT_TRUE(out.inverted_b);
  EXPECT_EQ(out.gates.gates().back(), Gate::Not(2));
  EXPECT_GT(ens.Bias(2), 0.0);
}

TEST(GenerateTest, AllCold) {
  const std::vector<double> b(9, 1.0);
  auto ens = MolecularEnsemble::Create(b, 1000, 1);
  GeneratorConfig cfg;
  cfg.stagnation_window = 4;
  const auto r = Generate(ens, cfg);
  EXPECT_TRUE(r.circuit.empty());
  EXPECT_EQ(r.trace.size(), 5u);  // step 0 and four stagnant steps
  EXPECT_EQ(r.depth, 4);
  EXPECT_EQ(r.cold_block.size(), 9);
  EXPECT_EQ(r.cold_block.joint_probability, 1.0);
}

TEST(GenerateTest, AllHot) {
  const std::vector<double> b(30, 0.0);
  auto ens = MolecularEnsemble::Create(b, 100000, 1);
  const auto r = Generate(ens, DefaultGeneratorConfig(b));
  EXPECT_EQ(r.cold_block.size(), 0);
  // Kept boosts are sampling noise: no bias moves far from 0.
  for (double e : r.final_biases) EXPECT_LT(std::abs(e), 0.05);
}

TEST(GenerateTest, MaxDepthCaps) {
  const std::vector<double> b(30, 0.6);
  auto ens = MolecularEnsemble::Create(b, 20000, 1);
  GeneratorConfig cfg = DefaultGeneratorConfig(b);
  cfg.max_depth = 3;
  const auto r = Generate(ens, cfg);
  EXPECT_EQ(r.depth, 3);
  EXPECT_EQ(r.trace.size(), 4u);
  EXPECT_LE(r.circuit.layer_marks().size(), 3u);
}

TEST(GenerateTest, SevenQubitExample) {
  const std::vector<double> b(7, 0.6);
  const std::size_t n = 5000000;
  auto ens = MolecularEnsemble::Create(b, n, 1);
  const auto r = Generate(ens, DefaultGeneratorConfig(b));
  ASSERT_FALSE(r.circuit.empty());
  const Qubit top = SortedTable(r.final_biases).front();
  EXPECT_GT(r.final_biases[top - 1], 0.6);

  // Replaying the text form on a fresh ensemble lands on the same planes.
  const Circuit text = ParseCircuit(SerializeCircuit(r.circuit), 7);
  auto replay = MolecularEnsemble::Create(b, n, 1);
  replay.Apply(text);
  EXPECT_EQ(replay, ens);

  // The exact state agrees with the ensemble within sampling error.
  const auto exact =
      ApplyCircuitExact(PopulationVector::Product(b), r.circuit);
  EXPECT_NEAR(Entropies(exact).von_neumann, 7 * BinaryEntropy(0.6), 1e-9);
  const auto m = Marginals(exact);
  EXPECT_GT(m[top - 1].intrinsic_bias, 0.6);
  for (int q = 0; q < 7; ++q) {
    const double s = std::sqrt((1 - m[q].bias * m[q].bias) / n);
    // Replay compounds the initial sampling error through the circuit.
    EXPECT_NEAR(r.final_biases[q], m[q].bias, 10 * s + 1e-3) << q + 1;
  }
}

TEST(GenerateTest, TraceIsConsistent) {
  const std::vector<double> b(40, 0.5);
  GeneratorConfig cfg = DefaultGeneratorConfig(b);
  cfg.record_biases = true;
  auto ens = MolecularEnsemble::Create(b, 50000, 3);
  const auto r = Generate(ens, cfg);
  ASSERT_EQ(static_cast<int>(r.trace.size()), r.depth + 1);
  for (std::size_t d = 0; d < r.trace.size(); ++d) {
    EXPECT_EQ(r.trace[d].depth, static_cast<int>(d));
    EXPECT_EQ(r.trace[d].biases.size(), 40u);
    EXPECT_NEAR(r.trace[d].effective_entropy,
                EffectiveEntropy(r.trace[d].biases), 1e-12);
  }
  EXPECT_EQ(r.trace.back().biases, r.final_biases);
  EXPECT_EQ(r.trace.back().effective_entropy, r.final_effective_entropy);
  EXPECT_EQ(ens.Biases(), r.final_biases);
}

TEST(GenerateTest, TargetKeepsBoostedRole) {
  const std::vector<double> b = {0.8, 0.8, 0.8, 0.8, 0.27, 0.27, 0.27, 0.42,
                                 0.42};
  GeneratorConfig cfg = DefaultGeneratorConfig(b);
  cfg.target = 5;
  auto ens = MolecularEnsemble::Create(b, 1000000, 1);
  const auto r = Generate(ens, cfg);
  bool touched = false;
  for (const Gate& g : r.circuit.gates()) {
    for (int i = 0; i < g.arity(); ++i) {
      if (g.q[i] != 5) continue;
      touched = true;
      EXPECT_EQ(g.kind, GateKind::kFredkin);
      EXPECT_EQ(i, 0);
    }
  }
  EXPECT_TRUE(touched);
  EXPECT_GT(r.final_biases[4], 0.27);

  cfg.target = 10;
  auto again = MolecularEnsemble::Create(b, 1000, 1);
  EXPECT_THROW(Generate(again, cfg), std::invalid_argument);
}

TEST(PickColdBlockTest, Prefix) {
  MolecularEnsemble ens(3, 10);
  // Qubit 2 is 1 in molecule 0; qubit 3 in molecules 1 and 2.
  ens.SetBit(0, 2, true);
  ens.SetBit(1, 3, true);
  ens.SetBit(2, 3, true);
  const Qubit tbl[] = {1, 2, 3};
  auto block = PickColdBlock(ens, tbl, 0.85);
  EXPECT_EQ(block.qubits, (std::vector<Qubit>{1, 2}));
  EXPECT_DOUBLE_EQ(block.joint_probability, 0.9);
  block = PickColdBlock(ens, tbl, 0.9);  // strict
  EXPECT_EQ(block.qubits, (std::vector<Qubit>{1}));
  block = PickColdBlock(ens, tbl, 0.5);
  EXPECT_EQ(block.size(), 3);
  EXPECT_DOUBLE_EQ(block.joint_probability, 0.7);
}

}  // namespace
}  // namespace boostsim
