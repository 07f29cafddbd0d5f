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


#include "boostsim/analytics.h"

#include <cmath>
#include <vector>

#include "boostsim/population.h"
#include "gtest/gtest.h"

namespace boostsim {
namespace {

TEST(Thermal, Bias) {
  EXPECT_EQ(ThermalBias({0.0, 300.0}), 0.0);
  const double t = 4.0;
  const double gap = 2.0 * kBoltzmann * t * std::atanh(0.4);
  EXPECT_NEAR(ThermalBias({gap, t}), 0.4, 1e-14);
  double last = 1.0;
  for (double temp : {1.0, 10.0, 100.0, 1000.0}) {
    const double e = ThermalBias({1e-23, temp});
    EXPECT_LT(e, last);
    last = e;
  }
  EXPECT_THROW(ThermalBias({1e-23, 0.0}), std::invalid_argument);
  EXPECT_THROW(ThermalBias({-1e-23, 1.0}), std::invalid_argument);
}

TEST(Entropy, Binary) {
  EXPECT_EQ(BinaryEntropy(0.0), 1.0);
  EXPECT_EQ(BinaryEntropy(1.0), 0.0);
  EXPECT_EQ(BinaryEntropy(-1.0), 0.0);
  // Reference values from 30-digit arithmetic.
  EXPECT_NEAR(BinaryEntropy(0.6), 0.721928094887362347870, 1e-14);
  EXPECT_NEAR(1000 * BinaryEntropy(0.7), 609.840304716400423636, 1e-10);
  EXPECT_EQ(BinaryEntropy(-0.3), BinaryEntropy(0.3));
  EXPECT_THROW(BinaryEntropy(1.01), std::invalid_argument);
  const std::vector<double> v = {0.6, -0.6, 1.0};
  EXPECT_NEAR(EffectiveEntropy(v), 2 * 0.721928094887362347870, 1e-14);
}

TEST(Predictor, Values) {
  const auto p = PredictBoost({0.6, 0.6, 0.6});
  EXPECT_NEAR(p.a, 0.792, 1e-15);
  EXPECT_NEAR(p.b, 0.408, 1e-15);
  EXPECT_NEAR(p.c, 0.36, 1e-15);
  const auto one = PredictBoost({1, 1, 1});
  EXPECT_EQ(one.a, 1.0);
  EXPECT_EQ(one.b, 1.0);
  EXPECT_EQ(one.c, 1.0);
  const auto zero = PredictBoost({0, 0, 0});
  EXPECT_EQ(zero.a, 0.0);
}

TEST(Predictor, AgreesWithExactOracle) {
  for (int i = 0; i <= 10; i += 2) {
    for (int j = 0; j <= 10; j += 2) {
      for (int k = 0; k <= 10; k += 2) {
        const double b[] = {i / 10.0, j / 10.0, k / 10.0};
        const auto s = ApplyCircuitExact(PopulationVector::Product(b),
                                         BasicBoostA(3, 1, 2, 3));
        const auto p = PredictBoost({b[0], b[1], b[2]});
        EXPECT_NEAR(Marginal(s, 1).bias, p.a, 1e-12);
        EXPECT_NEAR(Marginal(s, 2).bias, p.b, 1e-12);
        EXPECT_NEAR(Marginal(s, 3).bias, p.c, 1e-12);
      }
    }
  }
}

TEST(Predictor, Condition) {
  EXPECT_TRUE(BoostCondition({0.6, 0.6, 0.6}));
  EXPECT_FALSE(BoostCondition({0.9, 0.5, 0.5}));
  EXPECT_FALSE(BoostCondition({0.0, 0.0, 0.0}));
  EXPECT_THROW(BoostCondition({0.5, 1.0, -1.0}), std::invalid_argument);
  // The condition is exactly "predicted a grows".
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const TrioBiases t{i / 10.0, j / 10.0, 0.45};
      if (std::abs(PredictBoost(t).a - t.a) < 1e-12) continue;
      EXPECT_EQ(BoostCondition(t), PredictBoost(t).a > t.a);
    }
  }
}

TEST(StepStudyTest, EdgesAndReference) {
  for (int w : {3, 4}) {
    EXPECT_NEAR(StepStudy(0.0, w).mean_gap, 0.0, 1e-15);
    EXPECT_NEAR(StepStudy(1.0, w).mean_gap, 0.0, 1e-15);
  }
  EXPECT_NEAR(StepStudy(0.5, 3).mean_gap, 0.0247413690552856834, 1e-14);
  EXPECT_NEAR(StepStudy(0.5, 4).mean_gap, 0.0543449964079222877, 1e-14);
  EXPECT_THROW(StepStudy(0.5, 5), std::invalid_argument);
  EXPECT_THROW(StepStudy(-0.1, 3), std::invalid_argument);
}

TEST(StepStudyTest, ThreeWiresMatchExactOracle) {
  for (int i = 0; i <= 20; ++i) {
    const double e = i / 20.0;
    const double b[] = {e, e, e};
    const auto s = ApplyCircuitExact(PopulationVector::Product(b),
                                     BasicBoostA(3, 1, 2, 3));
    const auto r = Entropies(s);
    const auto p = StepStudy(e, 3);
    EXPECT_NEAR(p.entropy, r.von_neumann, 1e-12);
    EXPECT_NEAR(p.out_effective, r.effective, 1e-12);
  }
}

TEST(Bounds, Alpha) {
  EXPECT_EQ(AlphaBound(1.0, 16), 0.0);
  EXPECT_NEAR(AlphaBound(0.99, 16), 7.58518605280716410e-3, 1e-15);
  EXPECT_NEAR(BetaFromAlpha(AlphaBound(0.99, 16)), 7.64316084988507411e-3,
              1e-15);
  double last = 1.0;
  for (int l = 1; l <= 256; l *= 2) {
    const double a = AlphaBound(0.99, l);
    EXPECT_LT(a, last);
    last = a;
  }
  EXPECT_THROW(AlphaBound(0.0, 3), std::invalid_argument);
  EXPECT_THROW(AlphaBound(0.9, 0), std::invalid_argument);
}

TEST(Bounds, LimitOnColdQubits) {
  EXPECT_EQ(LUpperBound(1000, 1000, 0.3), 0.0);
  EXPECT_NEAR(LUpperBound(1000, 609.8, 0.0), 390.2, 1e-9);
  EXPECT_NEAR(LUpperBound(1000, 806.8, 0.0), 193.2, 1e-9);
  const auto r = Bounds(1000, 806.8, 0.99, 16);
  EXPECT_NEAR(r.l_max, (1 + r.beta) * 193.2, 1e-9);
  EXPECT_NEAR(r.min_block_entropy, 806.8 - 16 * r.alpha, 1e-9);
}

TEST(EfficienciesTest, Values) {
  const auto same = ComputeEfficiencies(10, 6, 6);
  EXPECT_EQ(same.initialization, 1.0);
  EXPECT_EQ(same.compression, 1.0);
  EXPECT_NEAR(ComputeEfficiencies(1000, 609.8, 806.8).initialization,
              0.495130702203997950, 1e-12);
  EXPECT_EQ(ComputeEfficiencies(10, 6, 10).initialization, 0.0);
  EXPECT_THROW(ComputeEfficiencies(10, 10, 10), std::invalid_argument);
}

TEST(DefaultEpsColdTest, Values) {
  EXPECT_NEAR(DefaultEpsCold(30, 8), 0.990444670350104970, 1e-15);
  EXPECT_GT(DefaultEpsCold(30, 8), 0.99);
  EXPECT_NEAR(DefaultEpsCold(5, 4), 0.8, 1e-15);
  EXPECT_NEAR(DefaultEpsCold(5, 5), 0.8, 1e-15);
  EXPECT_NEAR(DefaultEpsCold(5, 4.2), 0.8, 1e-15);
}

TEST(Nonuniform, Predictions) {
  const auto same = PredictNonuniform(70, 20, 20);
  EXPECT_NEAR(same.split_blocks, same.uniform, 1e-12);
  const auto one = PredictNonuniform(70, 20, 0);
  EXPECT_NEAR(one.split_blocks, 35 * std::sqrt(40.0 / 70), 1e-12);
  EXPECT_LE(one.split_blocks, one.uniform);
}

}  // namespace
}  // namespace boostsim
