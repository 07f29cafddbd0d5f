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

// boostsim: command-line driver for circuit generation and the entropy
// studies. Run `boostsim <command> --help` for the flags of each command.
//
// Settings come from, in increasing priority: command defaults, a
// key=value file given with --config, and explicit flags.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boostsim/circuit_text.h"
#include "boostsim/experiments.h"
#include "boostsim/run_config.h"

namespace {

using boostsim::RunConfig;

// Flags shared by every simulation command, kept as text so that they can
// be layered over a config file with the same parser.
struct CommonFlags {
  std::string config_path;
  std::map<std::string, std::string> values;

  void Register(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "key=value configuration file")
        ->check(CLI::ExistingFile);
    Add(cmd, "--n", "n", "number of qubits");
    Add(cmd, "--bias", "bias",
        "uniform:E | list:E1,E2,... | alt:E,chi=X");
    Add(cmd, "--molecules", "molecules", "ensemble size N, or auto (10^4 n)");
    Add(cmd, "--seed", "seed", "random seed");
    Add(cmd, "--eps-cold", "eps_cold", "cold threshold (default from S)");
    Add(cmd, "--st", "st", "stagnation window (default 5 + n/10)");
    Add(cmd, "--max-depth", "max_depth", "depth cap (default 100)");
    Add(cmd, "--joint-target", "joint_target",
        "all-zero probability for the cold block (default 0.9)");
    Add(cmd, "--target", "target", "qubit kept in the boosted role");
    Add(cmd, "--out", "out", "output directory");
    Add(cmd, "--threads", "threads", "kernel threads (0 = OpenMP default)");
    Add(cmd, "--jobs", "jobs", "runs executed concurrently");
    Add(cmd, "--exact-cap", "exact_cap", "widest exact replay");
  }

  RunConfig Resolve(RunConfig config) const {
    if (!config_path.empty()) boostsim::ApplyConfigFile(config_path, config);
    for (const auto& [key, value] : values) {
      boostsim::SetConfigValue(config, key, value);
    }
    return config;
  }

 private:
  void Add(CLI::App* cmd, const std::string& flag, const std::string& key,
           const std::string& help) {
    cmd->add_option_function<std::string>(
        flag, [this, key](const std::string& v) { values[key] = v; }, help);
  }
};

RunConfig Defaults(int n, double bias) {
  RunConfig c;
  c.n = n;
  c.bias = boostsim::BiasSpec::Uniform(bias);
  return c;
}

std::vector<double> Doubles(const std::string& text,
                            std::vector<double> fallback) {
  return text.empty() ? fallback : boostsim::ParseDoubleList(text);
}

std::vector<double> StepGrid() {
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  return grid;
}

void PrintSummary(const boostsim::RunSummary& s) {
  std::printf(
      "n=%d N=%zu seed=%llu S=%.6f S_e_end=%.6f depth=%d gates=%zu l=%d "
      "joint_prob=%.6f time=%.2fs\n",
      s.n, s.molecules, static_cast<unsigned long long>(s.seed), s.entropy,
      s.final_effective, s.depth, s.gates, s.cold, s.joint_probability,
      s.seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bias-boosting circuit generator and entropy studies"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string eps_list;
  std::string width_list;
  std::string grid_list;
  std::string chi_list;
  std::string molecule_grid;
  std::string circuit_path;
  int samples = 0;
  double eps_a = 0.6;
  bool bias_file = false;

  auto* gen = app.add_subcommand("gen", "generate one initialization circuit");
  flags.Register(gen);
  gen->add_flag("--bias-file", bias_file, "also write the per-step biases");

  auto* depth = app.add_subcommand("depth-trace", "S_e against depth per bias");
  flags.Register(depth);
  depth->add_option("--eps", eps_list, "bias list (default 0.3,0.5,0.7,0.9)");

  auto* relation =
      app.add_subcommand("relation-sweep", "S_e^end/n against sqrt(S/n)");
  flags.Register(relation);
  relation->add_option("--widths", width_list, "qubit counts (default 70,200)");
  relation->add_option("--eps", eps_list,
                       "bias grid (default 0.1,...,0.9,0.975)");

  auto* rate = app.add_subcommand("rate", "cold block size, best of seeds");
  flags.Register(rate);
  rate->add_option("--widths", width_list, "qubit counts (default 100)");
  rate->add_option("--eps", eps_list, "bias list (default 0.1,...,0.9)");
  rate->add_option("--samples", samples, "seeds per point (default 5)");

  auto* eps_cold =
      app.add_subcommand("eps-cold-sweep", "S_e^end/n against eps_cold");
  flags.Register(eps_cold);
  eps_cold->add_option("--eps", eps_list, "bias list (default 0.3,0.5,0.7)");
  eps_cold->add_option("--grid", grid_list,
                       "eps_cold grid (default 0.8,0.85,0.9,0.92,0.95,0.99)");

  auto* reliability =
      app.add_subcommand("reliability", "spread of S_e^end over seeds");
  flags.Register(reliability);
  reliability->add_option("--molecule-grid", molecule_grid,
                          "ensemble sizes (default 1e5,5e5,1e6)");
  reliability->add_option("--samples", samples, "seeds per size (default 60)");

  auto* nonuniform =
      app.add_subcommand("nonuniform", "alternating A/B bias structure");
  flags.Register(nonuniform);
  nonuniform->add_option("--eps-a", eps_a, "bias of the A qubits");
  nonuniform->add_option("--chi", chi_list,
                         "ratio eps_B / eps_A (default 0.1,0.4,0.7,1)");

  auto* step = app.add_subcommand("step-study",
                                  "one-step correlation growth, 3 and 4 wires");
  std::string step_out = ".";
  step->add_option("--eps", eps_list, "bias grid (default 0, 0.01, ..., 1)");
  step->add_option("--out", step_out, "output directory");

  auto* verify =
      app.add_subcommand("verify-exact", "replay a circuit file exactly");
  flags.Register(verify);
  verify->add_option("--circuit", circuit_path, "circuit file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      RunConfig c = flags.Resolve(Defaults(0, 0.0));
      c.bias_file = c.bias_file || bias_file;
      if (c.n < 1) throw boostsim::ConfigError("gen: --n is required");
      PrintSummary(boostsim::CmdGen(c).summary);
    } else if (*depth) {
      RunConfig c = flags.Resolve(Defaults(1000, 0.0));
      for (const auto& curve :
           boostsim::CmdDepthTrace(c, Doubles(eps_list, {0.3, 0.5, 0.7, 0.9}))) {
        PrintSummary(curve.summary);
      }
    } else if (*relation) {
      RunConfig c = flags.Resolve(Defaults(0, 0.0));
      const std::vector<int> widths = width_list.empty()
                                          ? std::vector<int>{70, 200}
                                          : boostsim::ParseIntList(width_list);
      for (const auto& r : boostsim::CmdRelationSweep(
               c, widths, Doubles(eps_list, boostsim::DefaultRelationGrid()))) {
        std::printf("n=%d eps=%g S_e_end/n=%.4f sqrt(S/n)=%.4f delta=%+.4f%s\n",
                    r.n, r.bias, r.se_end_over_n, r.sqrt_s_over_n, r.delta,
                    r.outside_band ? "  outside band" : "");
      }
    } else if (*rate) {
      RunConfig c = flags.Resolve(Defaults(0, 0.0));
      const std::vector<int> widths = width_list.empty()
                                          ? std::vector<int>{100}
                                          : boostsim::ParseIntList(width_list);
      for (const auto& r : boostsim::CmdRate(
               c, widths,
               Doubles(eps_list, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}),
               samples > 0 ? samples : 5)) {
        std::printf("n=%d eps=%g l=%d (worst %d) l/n=%.4f\n", r.n, r.bias,
                    r.best_cold, r.worst_cold, r.l_over_n);
      }
    } else if (*eps_cold) {
      RunConfig c = flags.Resolve(Defaults(100, 0.0));
      const auto result = boostsim::CmdEpsColdSweep(
          c, Doubles(eps_list, {0.3, 0.5, 0.7}),
          Doubles(grid_list, {0.8, 0.85, 0.9, 0.92, 0.95, 0.99}));
      for (const auto& s : result.spreads) {
        std::printf("eps=%g spread=%.4f\n", s.bias, s.spread);
      }
    } else if (*reliability) {
      RunConfig c = flags.Resolve(Defaults(100, 0.5));
      std::vector<std::size_t> sizes;
      for (double v : Doubles(molecule_grid, {1e5, 5e5, 1e6})) {
        if (!(v >= 1.0)) throw boostsim::ConfigError("molecule grid: need N >= 1");
        sizes.push_back(static_cast<std::size_t>(v));
      }
      for (const auto& r : boostsim::CmdReliability(
               c, sizes, samples > 0 ? samples : 60)) {
        std::printf("N=%zu mean=%.4f ci99=%.4f V_s=%.4f\n", r.molecules,
                    r.mean, r.ci_half_width, r.variance);
      }
    } else if (*nonuniform) {
      RunConfig c = flags.Resolve(Defaults(70, 0.0));
      for (const auto& r : boostsim::CmdNonuniform(
               c, eps_a, Doubles(chi_list, {0.1, 0.4, 0.7, 1.0}))) {
        std::printf("chi=%g S=%.4f S_e_end=%.4f sqrt(nS)=%.4f residual=%+.4f\n",
                    r.chi, r.entropy, r.final_effective, r.sqrt_nS,
                    r.residual);
      }
    } else if (*step) {
      boostsim::CmdStepStudy(Doubles(eps_list, StepGrid()), step_out);
    } else if (*verify) {
      RunConfig c = flags.Resolve(Defaults(0, 0.0));
      if (c.n < 1) throw boostsim::ConfigError("verify-exact: --n is required");
      boostsim::CmdVerifyExact(circuit_path, c, std::cout);
    }
  } catch (const boostsim::ParseError& e) {
    std::fprintf(stderr, "%s:%d:%d: %s\n", circuit_path.c_str(), e.line(),
                 e.column(), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "boostsim: %s\n", e.what());
    return 1;
  }
  return 0;
}
