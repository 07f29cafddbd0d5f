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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boostsim {

namespace {

// -p log2 p with 0 log 0 = 0.
double Plog(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

double ThermalBiasFromRatio(double gap_over_kt) {
  return std::tanh(gap_over_kt / 2.0);
}

double ThermalBias(const ThermalParams& p) {
  if (!(p.temperature > 0.0)) {
    throw std::invalid_argument("temperature must be positive");
  }
  if (p.energy_gap < 0.0) {
    throw std::invalid_argument("energy gap must be nonnegative");
  }
  return ThermalBiasFromRatio(p.energy_gap / (kBoltzmann * p.temperature));
}

double BinaryEntropy(double bias) {
  if (!(std::abs(bias) <= 1.0)) {
    throw std::invalid_argument("bias outside [-1, 1]");
  }
  return Plog((1.0 + bias) / 2.0) + Plog((1.0 - bias) / 2.0);
}

double EffectiveEntropy(std::span<const double> biases) {
  double s = 0.0;
  for (double e : biases) s += BinaryEntropy(std::abs(e));
  return s;
}

TrioBiases PredictBoost(const TrioBiases& in) {
  const double abc = in.a * in.b * in.c;
  return {(in.a + in.b + in.c - abc) / 2.0, (in.a + in.b - in.c + abc) / 2.0,
          in.b * in.c};
}

bool BoostCondition(const TrioBiases& in) {
  const double den = 1.0 + in.b * in.c;
  if (den == 0.0) {
    throw std::invalid_argument("boost condition undefined for b c = -1");
  }
  return in.a < (in.b + in.c) / den;
}

StepStudyPoint StepStudy(double bias, int width) {
  if (width != 3 && width != 4) {
    throw std::invalid_argument("step study supports 3 or 4 wires");
  }
  if (!(bias >= 0.0 && bias <= 1.0)) {
    throw std::invalid_argument("step study bias outside [0, 1]");
  }
  const double e = bias;
  const double e3 = e * e * e;
  double out = BinaryEntropy((3.0 * e - e3) / 2.0) +
               BinaryEntropy((e + e3) / 2.0) + BinaryEntropy(e * e);
  if (width == 4) out += BinaryEntropy(e * e);
  StepStudyPoint p;
  p.bias = bias;
  p.width = width;
  p.entropy = width * BinaryEntropy(e);
  p.out_effective = out;
  p.mean_gap = (out - p.entropy) / width;
  return p;
}

double AlphaBound(double c, int l) {
  if (!(c > 0.0 && c <= 1.0)) {
    throw std::invalid_argument("joint target must lie in (0, 1]");
  }
  if (l < 1) throw std::invalid_argument("cold count must be at least 1");
  const double x = std::pow(c, 1.0 / l);
  return Plog(x) + Plog(1.0 - x);
}

double BetaFromAlpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1)");
  }
  return alpha / (1.0 - alpha);
}

double LUpperBound(double n, double effective_entropy, double beta) {
  return (1.0 + beta) * (n - effective_entropy);
}

BoundsReport Bounds(int n, double effective_entropy, double c, int l) {
  BoundsReport r;
  r.target = c;
  r.cold = l;
  r.alpha = AlphaBound(c, std::max(l, 1));
  r.beta = BetaFromAlpha(r.alpha);
  r.min_block_entropy = effective_entropy - r.alpha * l;
  r.l_max = LUpperBound(n, effective_entropy, r.beta);
  return r;
}

Efficiencies ComputeEfficiencies(double n, double entropy,
                                 double effective_entropy_end) {
  if (entropy >= n) {
    throw std::invalid_argument("initialization efficiency undefined at S = n");
  }
  if (!(effective_entropy_end > 0.0)) {
    throw std::invalid_argument("compression efficiency needs S_e > 0");
  }
  return {(n - effective_entropy_end) / (n - entropy),
          entropy / effective_entropy_end};
}

double DefaultEpsCold(double n, double entropy) {
  const double gap = std::max(1.0, std::ceil(n - entropy));
  return 2.0 * std::pow(0.9, 1.0 / gap) - 1.0;
}

NonuniformPrediction PredictNonuniform(double n, double entropy_a,
                                       double entropy_b) {
  NonuniformPrediction p;
  p.split_blocks = (n / 2.0) * std::sqrt(2.0 * entropy_a / n) +
                   (n / 2.0) * std::sqrt(2.0 * entropy_b / n);
  p.uniform = std::sqrt(n * (entropy_a + entropy_b));
  return p;
}

}  // namespace boostsim
