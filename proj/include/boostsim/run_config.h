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

#ifndef BOOSTSIM_RUN_CONFIG_H_
#define BOOSTSIM_RUN_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boostsim/circuit.h"
#include "boostsim/generator.h"

namespace boostsim {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Initial bias assignment:
//
//   uniform:0.6               every qubit 0.6
//   list:0.8,0.8,0.27         one value per qubit
//   alt:0.6,chi=0.4           odd qubits 0.6, even qubits 0.6 * 0.4
struct BiasSpec {
  enum class Kind { kUniform, kList, kAlternating };

  Kind kind = Kind::kUniform;
  double value = 0.0;
  double chi = 1.0;
  std::vector<double> list;

  static BiasSpec Uniform(double bias);
  static BiasSpec Alternating(double bias_a, double chi);
  static BiasSpec Parse(std::string_view text);

  std::vector<double> Expand(int n) const;
  std::string ToString() const;
};

inline constexpr std::size_t kDefaultMolecules = 5'000'000;

struct RunConfig {
  int n = 0;
  BiasSpec bias;
  // 0 selects 10^4 n.
  std::size_t molecules = kDefaultMolecules;
  uint64_t seed = 1;
  std::optional<double> eps_cold;
  std::optional<int> stagnation_window;
  int max_depth = 100;
  double joint_target = 0.9;
  std::optional<Qubit> target;
  std::string out_dir = ".";
  bool bias_file = false;  // also write the per-step bias matrix
  int threads = 0;         // kernel threads, 0 = OpenMP default
  int jobs = 1;            // independent runs executed concurrently
  int exact_cap = 16;      // widest circuit replayed through the exact oracle

  std::size_t ResolvedMolecules() const;
  std::vector<double> InitialBiases() const;
  GeneratorConfig ToGeneratorConfig(const std::vector<double>& biases) const;
  void Validate() const;
};

// Applies `key = value` lines to `config`. '#' starts a comment. Keys:
// n, bias, molecules (a count or "auto"), seed, eps_cold, st, max_depth,
// joint_target, target, out, bias_file, threads, jobs, exact_cap.
void ApplyConfigText(std::string_view text, RunConfig& config);
void ApplyConfigFile(const std::string& path, RunConfig& config);

// Sets one key; throws ConfigError naming the key on a bad value.
void SetConfigValue(RunConfig& config, std::string_view key,
                    std::string_view value);

std::vector<double> ParseDoubleList(std::string_view text);
std::vector<int> ParseIntList(std::string_view text);

}  // namespace boostsim

#endif  // BOOSTSIM_RUN_CONFIG_H_
