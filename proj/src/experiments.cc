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

#include "boostsim/experiments.h"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "boostsim/circuit_text.h"
#include "boostsim/ensemble.h"
#include "boostsim/plane_kernels.h"

namespace boostsim {

namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string Opt(const std::optional<double>& v) { return v ? Num(*v) : ""; }

std::ofstream OpenOut(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

void Schema(std::ostream& out, const char* table, int version = 1) {
  out << "# boostsim " << table << " v" << version << '\n';
}

// Restores the kernel thread count on scope exit.
class KernelThreadScope {
 public:
  explicit KernelThreadScope(int threads) : saved_(KernelThreads()) {
    if (threads > 0) SetKernelThreads(threads);
  }
  ~KernelThreadScope() { SetKernelThreads(saved_); }

 private:
  int saved_;
};

}  // namespace

RunOutput ExecuteRun(const RunConfig& config) {
  config.Validate();
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> biases = config.InitialBiases();
  const GeneratorConfig gcfg = config.ToGeneratorConfig(biases);

  RunOutput out;
  out.config = config;
  {
    MolecularEnsemble ens = MolecularEnsemble::Create(
        biases, config.ResolvedMolecules(), config.seed);
    out.generation = Generate(ens, gcfg);
  }

  RunSummary& s = out.summary;
  s.n = config.n;
  s.molecules = config.ResolvedMolecules();
  s.seed = config.seed;
  s.bias = config.bias.ToString();
  s.eps_cold = gcfg.eps_cold;
  s.stagnation_window = gcfg.stagnation_window;
  s.entropy = EffectiveEntropy(biases);
  s.initial_effective = out.generation.trace.front().effective_entropy;
  s.final_effective = out.generation.final_effective_entropy;
  s.depth = out.generation.depth;
  s.gates = out.generation.circuit.size();
  s.cold = out.generation.cold_block.size();
  s.joint_probability = out.generation.cold_block.joint_probability;
  if (s.entropy < s.n) {
    s.r_e = (s.n - s.final_effective) / (s.n - s.entropy);
  }
  if (s.final_effective > 0.0) s.r_c = s.entropy / s.final_effective;
  if (config.n <= config.exact_cap) {
    const PopulationVector replay = ApplyCircuitExact(
        PopulationVector::Product(biases, config.exact_cap),
        out.generation.circuit);
    s.entropy_exact = Entropies(replay).von_neumann;
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return out;
}

std::vector<RunOutput> ExecuteRuns(const std::vector<RunConfig>& configs,
                                   int jobs) {
  std::vector<RunOutput> out(configs.size());
  if (jobs <= 1 || configs.size() <= 1) {
    for (std::size_t i = 0; i < configs.size(); ++i) {
      out[i] = ExecuteRun(configs[i]);
    }
    return out;
  }
  // Runs share the process, so each one gets a single kernel thread.
  KernelThreadScope scope(1);
  std::vector<std::string> errors(configs.size());
  const auto count = static_cast<std::ptrdiff_t>(configs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = ExecuteRun(configs[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const std::string& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }
  return out;
}

double EarlyGrowthFraction(std::span<const TraceStep> trace, int depth) {
  if (trace.empty()) return 0.0;
  const double s0 = trace.front().effective_entropy;
  const double rise = trace.back().effective_entropy - s0;
  if (!(rise > 0.0)) return 0.0;
  double at = s0;
  for (const TraceStep& t : trace) {
    if (t.depth <= depth) at = t.effective_entropy;
  }
  return (at - s0) / rise;
}

void WriteTraceCsv(std::ostream& out, const GenerationResult& g) {
  Schema(out, "trace");
  out << "d,S_e,cold_count,kept_trios,undone_trios\n";
  for (const TraceStep& t : g.trace) {
    out << t.depth << ',' << Num(t.effective_entropy) << ',' << t.cold_count
        << ',' << t.kept_trios << ',' << t.undone_trios << '\n';
  }
}

void WriteBiasMatrixCsv(std::ostream& out, const GenerationResult& g) {
  Schema(out, "biases");
  const std::size_t n = g.final_biases.size();
  out << 'd';
  for (std::size_t i = 1; i <= n; ++i) out << ",q" << i;
  out << '\n';
  for (const TraceStep& t : g.trace) {
    out << t.depth;
    for (double e : t.biases) out << ',' << Num(e);
    out << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, std::span<const RunSummary> rows) {
  Schema(out, "summary");
  out << "n,molecules,seed,bias,eps_cold,st,S,S_exact,S_e_initial,S_e_end,"
         "depth,gates,l,joint_prob,r_e,r_c\n";
  for (const RunSummary& s : rows) {
    out << s.n << ',' << s.molecules << ',' << s.seed << ",\"" << s.bias
        << "\"," << Num(s.eps_cold) << ',' << s.stagnation_window << ','
        << Num(s.entropy) << ',' << Opt(s.entropy_exact) << ','
        << Num(s.initial_effective) << ',' << Num(s.final_effective) << ','
        << s.depth << ',' << s.gates << ',' << s.cold << ','
        << Num(s.joint_probability) << ',' << Opt(s.r_e) << ',' << Opt(s.r_c)
        << '\n';
  }
}

RunOutput CmdGen(const RunConfig& config) {
  KernelThreadScope scope(config.threads);
  RunOutput run = ExecuteRun(config);
  const std::string& dir = config.out_dir;
  {
    std::filesystem::create_directories(dir);
    WriteCircuitFile((std::filesystem::path(dir) / "circuit.txt").string(),
                     run.generation.circuit);
  }
  {
    auto out = OpenOut(dir, "trace.csv");
    WriteTraceCsv(out, run.generation);
  }
  {
    auto out = OpenOut(dir, "summary.csv");
    WriteSummaryCsv(out, std::span<const RunSummary>(&run.summary, 1));
  }
  if (config.bias_file) {
    auto out = OpenOut(dir, "biases.csv");
    WriteBiasMatrixCsv(out, run.generation);
  }
  return run;
}

std::vector<DepthCurve> CmdDepthTrace(const RunConfig& base,
                                      const std::vector<double>& biases) {
  KernelThreadScope scope(base.threads);
  std::vector<RunConfig> configs;
  for (double e : biases) {
    RunConfig c = base;
    c.bias = BiasSpec::Uniform(e);
    configs.push_back(c);
  }
  std::vector<RunOutput> runs = ExecuteRuns(configs, base.jobs);
  std::vector<DepthCurve> curves;
  auto out = OpenOut(base.out_dir, "depth_trace.csv");
  Schema(out, "depth_trace");
  out << "eps,d,S_e,cold_count,kept_trios,undone_trios\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    DepthCurve c;
    c.bias = biases[i];
    c.summary = runs[i].summary;
    c.trace = std::move(runs[i].generation.trace);
    for (const TraceStep& t : c.trace) {
      out << Num(c.bias) << ',' << t.depth << ',' << Num(t.effective_entropy)
          << ',' << t.cold_count << ',' << t.kept_trios << ','
          << t.undone_trios << '\n';
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

RelationRow MakeRelationRow(const RunSummary& s, double bias) {
  RelationRow r;
  r.n = s.n;
  r.bias = bias;
  r.s_over_n = s.entropy / s.n;
  r.se_end_over_n = s.final_effective / s.n;
  r.sqrt_s_over_n = std::sqrt(r.s_over_n);
  r.delta = r.se_end_over_n - r.sqrt_s_over_n;
  r.outside_band = s.n >= 1000 && !(r.delta > -0.05 && r.delta < 0.04);
  return r;
}

std::vector<RelationRow> CmdRelationSweep(const RunConfig& base,
                                          const std::vector<int>& widths,
                                          const std::vector<double>& biases) {
  KernelThreadScope scope(base.threads);
  for (double e : biases) {
    if (!(e >= 0.0 && e <= 0.975)) {
      throw ConfigError("relation-sweep: bias grid must lie in [0, 0.975]");
    }
  }
  std::vector<RunConfig> configs;
  std::vector<double> grid_bias;
  for (int n : widths) {
    for (double e : biases) {
      RunConfig c = base;
      c.n = n;
      c.bias = BiasSpec::Uniform(e);
      configs.push_back(c);
      grid_bias.push_back(e);
    }
  }
  const std::vector<RunOutput> runs = ExecuteRuns(configs, base.jobs);
  std::vector<RelationRow> rows;
  auto out = OpenOut(base.out_dir, "relation.csv");
  Schema(out, "relation");
  out << "n,eps,S_over_n,Se_end_over_n,sqrt_S_over_n,delta,outside_band\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const RelationRow r = MakeRelationRow(runs[i].summary, grid_bias[i]);
    out << r.n << ',' << Num(r.bias) << ',' << Num(r.s_over_n) << ','
        << Num(r.se_end_over_n) << ',' << Num(r.sqrt_s_over_n) << ','
        << Num(r.delta) << ',' << (r.outside_band ? 1 : 0) << '\n';
    rows.push_back(r);
  }
  return rows;
}

std::vector<RateRow> CmdRate(const RunConfig& base,
                             const std::vector<int>& widths,
                             const std::vector<double>& biases, int seeds) {
  KernelThreadScope scope(base.threads);
  if (seeds < 1) throw ConfigError("rate: need at least one seed");
  std::vector<RunConfig> configs;
  for (int n : widths) {
    for (double e : biases) {
      for (int k = 0; k < seeds; ++k) {
        RunConfig c = base;
        c.n = n;
        c.bias = BiasSpec::Uniform(e);
        c.seed = base.seed + static_cast<uint64_t>(k);
        configs.push_back(c);
      }
    }
  }
  const std::vector<RunOutput> runs = ExecuteRuns(configs, base.jobs);
  std::vector<RateRow> rows;
  auto out = OpenOut(base.out_dir, "rate.csv");
  Schema(out, "rate");
  out << "n,eps,l_best,l_worst,best_seed,S_e_end_best,l_over_n,"
         "l_over_n_minus_Se\n";
  std::size_t idx = 0;
  for (int n : widths) {
    for (double e : biases) {
      RateRow r;
      r.n = n;
      r.bias = e;
      r.best_cold = -1;
      r.worst_cold = n + 1;
      for (int k = 0; k < seeds; ++k, ++idx) {
        const RunSummary& s = runs[idx].summary;
        // Ties keep the earliest seed.
        if (s.cold > r.best_cold) {
          r.best_cold = s.cold;
          r.best_seed = s.seed;
          r.best_final_effective = s.final_effective;
        }
        r.worst_cold = std::min(r.worst_cold, s.cold);
      }
      r.l_over_n = static_cast<double>(r.best_cold) / n;
      const double gap = n - r.best_final_effective;
      if (gap > 0.0) r.l_over_gap = r.best_cold / gap;
      out << r.n << ',' << Num(r.bias) << ',' << r.best_cold << ','
          << r.worst_cold << ',' << r.best_seed << ','
          << Num(r.best_final_effective) << ',' << Num(r.l_over_n) << ','
          << Opt(r.l_over_gap) << '\n';
      rows.push_back(r);
    }
  }
  return rows;
}

EpsColdResult CmdEpsColdSweep(const RunConfig& base,
                              const std::vector<double>& biases,
                              const std::vector<double>& grid) {
  KernelThreadScope scope(base.threads);
  for (double g : grid) {
    if (!(g > 0.0 && g < 1.0)) {
      throw ConfigError("eps-cold-sweep: grid values must lie in (0, 1)");
    }
  }
  std::vector<RunConfig> configs;
  for (double e : biases) {
    for (double g : grid) {
      RunConfig c = base;
      c.bias = BiasSpec::Uniform(e);
      c.eps_cold = g;
      configs.push_back(c);
    }
  }
  const std::vector<RunOutput> runs = ExecuteRuns(configs, base.jobs);
  EpsColdResult result;
  auto out = OpenOut(base.out_dir, "eps_cold.csv");
  Schema(out, "eps_cold");
  out << "eps,eps_cold,Se_end_over_n\n";
  std::size_t idx = 0;
  for (double e : biases) {
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k, ++idx) {
      const RunSummary& s = runs[idx].summary;
      EpsColdRow row{e, grid[k], s.final_effective / s.n};
      out << Num(row.bias) << ',' << Num(row.eps_cold) << ','
          << Num(row.se_end_over_n) << '\n';
      lo = k == 0 ? row.se_end_over_n : std::min(lo, row.se_end_over_n);
      hi = k == 0 ? row.se_end_over_n : std::max(hi, row.se_end_over_n);
      result.rows.push_back(row);
    }
    result.spreads.push_back({e, hi - lo});
  }
  auto spread_out = OpenOut(base.out_dir, "eps_cold_spread.csv");
  Schema(spread_out, "eps_cold_spread");
  spread_out << "eps,spread\n";
  for (const EpsColdSpread& s : result.spreads) {
    spread_out << Num(s.bias) << ',' << Num(s.spread) << '\n';
  }
  return result;
}

SampleStats ComputeSampleStats(std::span<const double> samples,
                               double confidence) {
  SampleStats st;
  const auto k = static_cast<double>(samples.size());
  if (samples.empty()) return st;
  for (double x : samples) st.mean += x;
  st.mean /= k;
  if (samples.size() < 2) return st;
  for (double x : samples) st.variance += (x - st.mean) * (x - st.mean);
  st.variance /= k - 1.0;
  const boost::math::students_t dist(k - 1.0);
  const double t = boost::math::quantile(
      boost::math::complement(dist, (1.0 - confidence) / 2.0));
  st.ci_half_width = t * std::sqrt(st.variance / k);
  return st;
}

std::vector<ReliabilityRow> CmdReliability(
    const RunConfig& base, const std::vector<std::size_t>& molecule_grid,
    int samples) {
  KernelThreadScope scope(base.threads);
  if (samples < 2) throw ConfigError("reliability: need at least two samples");
  std::vector<RunConfig> configs;
  for (std::size_t molecules : molecule_grid) {
    for (int k = 0; k < samples; ++k) {
      RunConfig c = base;
      c.molecules = molecules;
      c.seed = base.seed + static_cast<uint64_t>(k);
      configs.push_back(c);
    }
  }
  const std::vector<RunOutput> runs = ExecuteRuns(configs, base.jobs);
  std::vector<ReliabilityRow> rows;
  auto raw = OpenOut(base.out_dir, "reliability_samples.csv");
  Schema(raw, "reliability_samples");
  raw << "molecules,seed,S_e_end\n";
  std::size_t idx = 0;
  for (std::size_t molecules : molecule_grid) {
    std::vector<double> values;
    for (int k = 0; k < samples; ++k, ++idx) {
      const RunSummary& s = runs[idx].summary;
      values.push_back(s.final_effective);
      raw << molecules << ',' << s.seed << ',' << Num(s.final_effective)
          << '\n';
    }
    const SampleStats st = ComputeSampleStats(values);
    ReliabilityRow r;
    r.molecules = molecules;
    r.samples = samples;
    r.mean = st.mean;
    r.ci_half_width = st.ci_half_width;
    r.variance = st.variance;
    r.min = *std::min_element(values.begin(), values.end());
    r.max = *std::max_element(values.begin(), values.end());
    rows.push_back(r);
  }
  auto out = OpenOut(base.out_dir, "reliability.csv");
  Schema(out, "reliability");
  out << "molecules,samples,mean_S_e_end,ci99_half_width,V_s,min,max\n";
  for (const ReliabilityRow& r : rows) {
    out << r.molecules << ',' << r.samples << ',' << Num(r.mean) << ','
        << Num(r.ci_half_width) << ',' << Num(r.variance) << ','
        << Num(r.min) << ',' << Num(r.max) << '\n';
  }
  return rows;
}

std::vector<NonuniformRow> CmdNonuniform(const RunConfig& base, double bias_a,
                                         const std::vector<double>& chis) {
  KernelThreadScope scope(base.threads);
  if (base.n % 2 != 0) throw ConfigError("nonuniform: n must be even");
  std::vector<RunConfig> configs;
  for (double chi : chis) {
    if (!(chi > 0.0 && chi <= 1.0)) {
      throw ConfigError("nonuniform: chi must lie in (0, 1]");
    }
    RunConfig c = base;
    c.bias = BiasSpec::Alternating(bias_a, chi);
    configs.push_back(c);
  }
  const std::vector<RunOutput> runs = ExecuteRuns(configs, base.jobs);
  std::vector<NonuniformRow> rows;
  auto out = OpenOut(base.out_dir, "nonuniform.csv");
  Schema(out, "nonuniform");
  out << "chi,eps_A,eps_B,S,S_e_AB_end,sqrt_nS,residual,split_prediction\n";
  const double n = base.n;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const RunSummary& s = runs[i].summary;
    NonuniformRow r;
    r.chi = chis[i];
    r.bias_a = bias_a;
    r.bias_b = bias_a * chis[i];
    r.entropy = s.entropy;
    r.final_effective = s.final_effective;
    r.sqrt_nS = std::sqrt(n * s.entropy);
    r.residual = r.final_effective - r.sqrt_nS;
    r.split_prediction =
        PredictNonuniform(n, (n / 2) * BinaryEntropy(r.bias_a),
                          (n / 2) * BinaryEntropy(r.bias_b))
            .split_blocks;
    out << Num(r.chi) << ',' << Num(r.bias_a) << ',' << Num(r.bias_b) << ','
        << Num(r.entropy) << ',' << Num(r.final_effective) << ','
        << Num(r.sqrt_nS) << ',' << Num(r.residual) << ','
        << Num(r.split_prediction) << '\n';
    rows.push_back(r);
  }
  return rows;
}

std::vector<StepStudyRow> CmdStepStudy(const std::vector<double>& biases,
                                       const std::string& out_dir) {
  std::vector<StepStudyRow> rows;
  auto out = OpenOut(out_dir, "step_study.csv");
  Schema(out, "step_study");
  out << "eps,S_3,Se_out_3,mean_gap_3,S_4,Se_out_4,mean_gap_4\n";
  for (double e : biases) {
    StepStudyRow r{StepStudy(e, 3), StepStudy(e, 4)};
    out << Num(e) << ',' << Num(r.three.entropy) << ','
        << Num(r.three.out_effective) << ',' << Num(r.three.mean_gap) << ','
        << Num(r.four.entropy) << ',' << Num(r.four.out_effective) << ','
        << Num(r.four.mean_gap) << '\n';
    rows.push_back(r);
  }
  return rows;
}

VerifyReport VerifyExact(const Circuit& circuit,
                         const std::vector<double>& biases, int max_qubits) {
  if (circuit.width() != static_cast<int>(biases.size())) {
    throw WidthError("circuit width " + std::to_string(circuit.width()) +
                     " but " + std::to_string(biases.size()) + " biases");
  }
  const PopulationVector before = PopulationVector::Product(biases, max_qubits);
  const PopulationVector after = ApplyCircuitExact(before, circuit);
  VerifyReport r;
  r.before = Marginals(before);
  r.after = Marginals(after);
  r.before_entropy = Entropies(before);
  r.after_entropy = Entropies(after);
  return r;
}

VerifyReport CmdVerifyExact(const std::string& circuit_path,
                            const RunConfig& config, std::ostream& report) {
  const std::vector<double> biases = config.InitialBiases();
  const int max_qubits = std::max(config.exact_cap, kDefaultMaxExactQubits);
  if (config.n > max_qubits) {
    throw CapacityError("verify-exact: n = " + std::to_string(config.n) +
                        " exceeds the exact cap " + std::to_string(max_qubits));
  }
  const Circuit circuit = ReadCircuitFile(circuit_path, config.n);
  const VerifyReport r = VerifyExact(circuit, biases, max_qubits);

  auto out = OpenOut(config.out_dir, "verify.csv");
  Schema(out, "verify");
  out << "qubit,bias_before,bias_after,intrinsic_before,intrinsic_after\n";
  for (std::size_t i = 0; i < r.before.size(); ++i) {
    out << i + 1 << ',' << Num(r.before[i].bias) << ',' << Num(r.after[i].bias)
        << ',' << Num(r.before[i].intrinsic_bias) << ','
        << Num(r.after[i].intrinsic_bias) << '\n';
  }

  report << "circuit: " << circuit_path << " (" << circuit.size()
         << " gates, width " << circuit.width() << ")\n";
  report << "qubit  intrinsic bias before -> after\n";
  for (std::size_t i = 0; i < r.before.size(); ++i) {
    char line[96];
    std::snprintf(line, sizeof(line), "%5zu  %.6f -> %.6f%s\n", i + 1,
                  r.before[i].intrinsic_bias, r.after[i].intrinsic_bias,
                  r.after[i].intrinsic_bias > r.before[i].intrinsic_bias
                      ? "  (boosted)"
                      : "");
    report << line;
  }
  report << "S       " << Num(r.before_entropy.von_neumann) << " -> "
         << Num(r.after_entropy.von_neumann) << '\n';
  report << "S_e     " << Num(r.before_entropy.effective) << " -> "
         << Num(r.after_entropy.effective) << '\n';
  report << "S_e - S " << Num(r.before_entropy.total_correlation) << " -> "
         << Num(r.after_entropy.total_correlation) << '\n';
  return r;
}

std::vector<double> DefaultRelationGrid() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.975};
}

}  // namespace boostsim
