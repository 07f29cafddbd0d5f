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

// Experiment drivers behind the command-line tool. Every command is
// deterministic given its configuration and seed; CSV output begins with a
// "# boostsim <table> v<version>" line followed by a header row.

#ifndef BOOSTSIM_EXPERIMENTS_H_
#define BOOSTSIM_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boostsim/analytics.h"
#include "boostsim/generator.h"
#include "boostsim/population.h"
#include "boostsim/run_config.h"

namespace boostsim {

struct RunSummary {
  int n = 0;
  std::size_t molecules = 0;
  uint64_t seed = 0;
  std::string bias;
  double eps_cold = 0.0;
  int stagnation_window = 0;
  double entropy = 0.0;                 // S from the initial biases
  std::optional<double> entropy_exact;  // S after exact replay
  double initial_effective = 0.0;
  double final_effective = 0.0;         // S_e^end
  int depth = 0;
  std::size_t gates = 0;
  int cold = 0;                         // l
  double joint_probability = 1.0;
  std::optional<double> r_e;
  std::optional<double> r_c;
  double seconds = 0.0;                 // wall time, never written to CSV
};

struct RunOutput {
  RunConfig config;
  GenerationResult generation;
  RunSummary summary;
};

RunOutput ExecuteRun(const RunConfig& config);

// Runs configurations `jobs` at a time; output order follows input order.
std::vector<RunOutput> ExecuteRuns(const std::vector<RunConfig>& configs,
                                   int jobs);

// Fraction of the total S_e rise reached by depth `depth`.
double EarlyGrowthFraction(std::span<const TraceStep> trace, int depth);

void WriteTraceCsv(std::ostream& out, const GenerationResult& g);
void WriteBiasMatrixCsv(std::ostream& out, const GenerationResult& g);
void WriteSummaryCsv(std::ostream& out, std::span<const RunSummary> rows);

// gen: circuit.txt, trace.csv, summary.csv, biases.csv when requested.
RunOutput CmdGen(const RunConfig& config);

struct DepthCurve {
  double bias = 0.0;
  RunSummary summary;
  std::vector<TraceStep> trace;
};

// depth-trace: depth_trace.csv.
std::vector<DepthCurve> CmdDepthTrace(const RunConfig& base,
                                      const std::vector<double>& biases);

struct RelationRow {
  int n = 0;
  double bias = 0.0;
  double s_over_n = 0.0;
  double se_end_over_n = 0.0;
  double sqrt_s_over_n = 0.0;
  double delta = 0.0;
  // n >= 1000 and delta outside (-0.05, 0.04).
  bool outside_band = false;
};

RelationRow MakeRelationRow(const RunSummary& s, double bias);

// relation-sweep: relation.csv.
std::vector<RelationRow> CmdRelationSweep(const RunConfig& base,
                                          const std::vector<int>& widths,
                                          const std::vector<double>& biases);

struct RateRow {
  int n = 0;
  double bias = 0.0;
  int best_cold = 0;
  int worst_cold = 0;
  uint64_t best_seed = 0;
  double best_final_effective = 0.0;
  double l_over_n = 0.0;
  std::optional<double> l_over_gap;  // l / (n - S_e^end)
};

// rate: rate.csv. Seeds base.seed .. base.seed + seeds - 1.
std::vector<RateRow> CmdRate(const RunConfig& base,
                             const std::vector<int>& widths,
                             const std::vector<double>& biases, int seeds = 5);

struct EpsColdRow {
  double bias = 0.0;
  double eps_cold = 0.0;
  double se_end_over_n = 0.0;
};

struct EpsColdSpread {
  double bias = 0.0;
  double spread = 0.0;  // max - min of S_e^end / n over the grid
};

struct EpsColdResult {
  std::vector<EpsColdRow> rows;
  std::vector<EpsColdSpread> spreads;
};

// eps-cold-sweep: eps_cold.csv and eps_cold_spread.csv. Grid values <= 0
// are rejected: no qubit can start a trio.
EpsColdResult CmdEpsColdSweep(const RunConfig& base,
                              const std::vector<double>& biases,
                              const std::vector<double>& grid);

struct ReliabilityRow {
  std::size_t molecules = 0;
  int samples = 0;
  double mean = 0.0;
  double ci_half_width = 0.0;  // 99%, Student t with samples - 1 dof
  double variance = 0.0;       // unbiased sample variance V_s
  double min = 0.0;
  double max = 0.0;
};

struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;
  double ci_half_width = 0.0;
};

// Mean, unbiased variance and the two-sided Student t half width.
SampleStats ComputeSampleStats(std::span<const double> samples,
                               double confidence = 0.99);

// reliability: reliability.csv and reliability_samples.csv. Sample k uses
// seed base.seed + k.
std::vector<ReliabilityRow> CmdReliability(
    const RunConfig& base, const std::vector<std::size_t>& molecule_grid,
    int samples);

struct NonuniformRow {
  double chi = 0.0;
  double bias_a = 0.0;
  double bias_b = 0.0;
  double entropy = 0.0;
  double final_effective = 0.0;
  double sqrt_nS = 0.0;
  double residual = 0.0;  // S_e,AB^end - sqrt(n S)
  double split_prediction = 0.0;
};

// nonuniform: nonuniform.csv.
std::vector<NonuniformRow> CmdNonuniform(const RunConfig& base, double bias_a,
                                         const std::vector<double>& chis);

struct StepStudyRow {
  StepStudyPoint three;
  StepStudyPoint four;
};

// step-study: step_study.csv.
std::vector<StepStudyRow> CmdStepStudy(const std::vector<double>& biases,
                                       const std::string& out_dir);

struct VerifyReport {
  std::vector<QubitMarginal> before;
  std::vector<QubitMarginal> after;
  EntropyReport before_entropy;
  EntropyReport after_entropy;
};

VerifyReport VerifyExact(const Circuit& circuit,
                         const std::vector<double>& biases, int max_qubits);

// verify-exact: verify.csv plus a human-readable report on `report`.
VerifyReport CmdVerifyExact(const std::string& circuit_path,
                            const RunConfig& config, std::ostream& report);

// Uniform biases 0.1, 0.2, ..., 0.9 and 0.975.
std::vector<double> DefaultRelationGrid();

}  // namespace boostsim

#endif  // BOOSTSIM_EXPERIMENTS_H_
