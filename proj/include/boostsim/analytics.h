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

// Closed-form quantities for bias boosting: thermal bias, binary entropy,
// the independent-input boost predictor, the cold-block entropy bounds and
// the one-step correlation growth of the 3- and 4-qubit boost circuits.
// Entropies are in bits.

#ifndef BOOSTSIM_ANALYTICS_H_
#define BOOSTSIM_ANALYTICS_H_

#include <span>

namespace boostsim {

// CODATA 2018, exact.
inline constexpr double kBoltzmann = 1.380649e-23;  // J/K

struct ThermalParams {
  double energy_gap = 0.0;   // joules
  double temperature = 0.0;  // kelvin
};

// tanh(E / 2 k_B T).
double ThermalBias(const ThermalParams& p);
// Same with the dimensionless ratio E / (k_B T).
double ThermalBiasFromRatio(double gap_over_kt);

// Entropy of a spin that is 0 with probability (1 + bias) / 2.
double BinaryEntropy(double bias);

// Sum of BinaryEntropy(|bias|).
double EffectiveEntropy(std::span<const double> biases);

struct TrioBiases {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Output biases of basic boost (a) on uncorrelated inputs.
TrioBiases PredictBoost(const TrioBiases& in);

// True iff the predicted bias of a grows: a < (b + c) / (1 + b c).
bool BoostCondition(const TrioBiases& in);

struct StepStudyPoint {
  double bias = 0.0;
  int width = 3;            // 3 or 4 wires
  double entropy = 0.0;     // S = width * H(bias)
  double out_effective = 0.0;
  double mean_gap = 0.0;    // (out_effective - entropy) / width
};

// One boost step on `width` uniform independent inputs. For width 4 the
// output marginals of the CC-SWAP circuit are (3e-e^3)/2, e^2, (e+e^3)/2,
// e^2.
StepStudyPoint StepStudy(double bias, int width);

// Largest mean binary entropy of l independent qubits whose all-zero joint
// probability is at least c.
double AlphaBound(double c, int l);
double BetaFromAlpha(double alpha);

// (1 + beta)(n - S_e).
double LUpperBound(double n, double effective_entropy, double beta);

struct BoundsReport {
  double target = 0.0;  // c
  int cold = 0;         // l
  double alpha = 0.0;
  double beta = 0.0;
  double min_block_entropy = 0.0;  // E >= S_e - alpha l
  double l_max = 0.0;
};

BoundsReport Bounds(int n, double effective_entropy, double c, int l);

struct Efficiencies {
  double initialization = 0.0;  // r_e = (n - S_e_end) / (n - S)
  double compression = 0.0;     // r_c = S / S_e_end
};

Efficiencies ComputeEfficiencies(double n, double entropy,
                                 double effective_entropy_end);

// 2 * 0.9^(1 / max(1, ceil(n - S))) - 1.
double DefaultEpsCold(double n, double entropy);

struct NonuniformPrediction {
  double split_blocks = 0.0;  // (n/2) sqrt(2 S_A / n) + (n/2) sqrt(2 S_B / n)
  double uniform = 0.0;       // sqrt(n (S_A + S_B))
};

NonuniformPrediction PredictNonuniform(double n, double entropy_a,
                                       double entropy_b);

}  // namespace boostsim

#endif  // BOOSTSIM_ANALYTICS_H_
