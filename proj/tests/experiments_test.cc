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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "boostsim/plane_kernels.h"
#include "gtest/gtest.h"

namespace boostsim {
namespace {

namespace fs = std::filesystem;

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path TempDir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("boostsim_test_" + name);
  fs::remove_all(p);
  return p;
}

RunConfig Small(int n, double bias) {
  RunConfig c;
  c.n = n;
  c.bias = BiasSpec::Uniform(bias);
  c.molecules = 20000;
  return c;
}

TEST(Stats, StudentInterval) {
  const std::vector<double> x = {1.0, 2.0, 3.0, 4.0, 5.0};
  const auto s = ComputeSampleStats(x);
  EXPECT_DOUBLE_EQ(s.mean, 3.0);
  EXPECT_DOUBLE_EQ(s.variance, 2.5);
  // t_{0.995, 4} = 4.604094871...
  EXPECT_NEAR(s.ci_half_width, 4.604094871415897 * std::sqrt(2.5 / 5), 1e-9);
}

TEST(Stats, EarlyGrowth) {
  std::vector<TraceStep> t(4);
  const double se[] = {10, 16, 19, 20};
  for (int d = 0; d < 4; ++d) {
    t[d].depth = d;
    t[d].effective_entropy = se[d];
  }
  EXPECT_DOUBLE_EQ(EarlyGrowthFraction(t, 1), 0.6);
  EXPECT_DOUBLE_EQ(EarlyGrowthFraction(t, 5), 1.0);
  t[3].effective_entropy = 10;
  for (auto& s : t) s.effective_entropy = 10;
  EXPECT_EQ(EarlyGrowthFraction(t, 1), 0.0);
}

TEST(Gen, TrivialInputs) {
  RunConfig cold = Small(100, 1.0);
  cold.out_dir = TempDir("cold").string();
  const auto r = CmdGen(cold);
  EXPECT_EQ(r.summary.gates, 0u);
  EXPECT_EQ(r.summary.cold, 100);
  EXPECT_EQ(r.summary.joint_probability, 1.0);
  EXPECT_EQ(Slurp(fs::path(cold.out_dir) / "circuit.txt"), "");

  RunConfig hot = Small(100, 0.0);
  hot.out_dir = TempDir("hot").string();
  EXPECT_EQ(CmdGen(hot).summary.cold, 0);
}

TEST(Gen, WritesFilesAndExactEntropy) {
  RunConfig c = Small(7, 0.6);
  c.out_dir = TempDir("gen7").string();
  c.bias_file = true;
  const auto r = CmdGen(c);
  EXPECT_NEAR(r.summary.entropy, 5.0535, 5e-5);
  ASSERT_TRUE(r.summary.entropy_exact.has_value());
  EXPECT_NEAR(*r.summary.entropy_exact, r.summary.entropy, 1e-9);
  for (const char* f : {"circuit.txt", "trace.csv", "summary.csv", "biases.csv"}) {
    EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / f)) << f;
  }
  const std::string trace = Slurp(fs::path(c.out_dir) / "trace.csv");
  EXPECT_EQ(trace.rfind("# boostsim trace v1\nd,S_e,", 0), 0u);
  const std::string summary = Slurp(fs::path(c.out_dir) / "summary.csv");
  EXPECT_NE(summary.find("uniform:0.6"), std::string::npos);
}

TEST(Determinism, ThreadCountsGiveSameBytes) {
  std::string first;
  for (int threads : {1, 2, 4}) {
    RunConfig c = Small(40, 0.5);
    c.molecules = 300000;  // above the parallel threshold
    c.threads = threads;
    c.out_dir = TempDir("det" + std::to_string(threads)).string();
    CmdGen(c);
    std::string all;
    for (const char* f : {"circuit.txt", "trace.csv", "summary.csv"}) {
      all += Slurp(fs::path(c.out_dir) / f);
    }
    if (first.empty()) {
      first = all;
    } else {
      EXPECT_EQ(all, first) << threads;
    }
  }
}

TEST(Determinism, JobsGiveSameBytes) {
  std::string first;
  for (int jobs : {1, 3}) {
    RunConfig c = Small(30, 0.0);
    c.jobs = jobs;
    c.out_dir = TempDir("jobs" + std::to_string(jobs)).string();
    CmdRelationSweep(c, {30, 36}, {0.3, 0.6});
    const std::string s = Slurp(fs::path(c.out_dir) / "relation.csv");
    if (first.empty()) {
      first = s;
    } else {
      EXPECT_EQ(s, first);
    }
  }
  EXPECT_EQ(KernelThreads() > 0, true);
}

TEST(Sweeps, SmallRuns) {
  RunConfig c = Small(30, 0.0);
  c.out_dir = TempDir("sweeps").string();
  const auto rel = CmdRelationSweep(c, {30}, {0.5});
  ASSERT_EQ(rel.size(), 1u);
  EXPECT_NEAR(rel[0].delta, rel[0].se_end_over_n - rel[0].sqrt_s_over_n, 1e-15);
  EXPECT_THROW(CmdRelationSweep(c, {30}, {0.99}), ConfigError);

  const auto rate = CmdRate(c, {30}, {1.0, 0.0}, 2);
  EXPECT_EQ(rate[0].l_over_n, 1.0);
  EXPECT_EQ(rate[1].l_over_n, 0.0);

  const auto eps = CmdEpsColdSweep(c, {0.5}, {0.9, 0.95});
  EXPECT_EQ(eps.rows.size(), 2u);
  EXPECT_GE(eps.spreads[0].spread, 0.0);
  EXPECT_THROW(CmdEpsColdSweep(c, {0.5}, {0.0}), ConfigError);

  const auto rel2 = CmdReliability(c, {5000, 10000}, 3);
  EXPECT_EQ(rel2.size(), 2u);
  EXPECT_LE(rel2[0].min, rel2[0].mean);

  RunConfig even = Small(10, 0.0);
  even.out_dir = c.out_dir;
  const auto nu = CmdNonuniform(even, 0.6, {0.5, 1.0});
  EXPECT_NEAR(nu[0].bias_b, 0.3, 1e-15);
  even.n = 9;
  EXPECT_THROW(CmdNonuniform(even, 0.6, {0.5}), ConfigError);

  const auto step = CmdStepStudy({0.0, 0.5, 1.0}, c.out_dir);
  EXPECT_GT(step[1].four.mean_gap, step[1].three.mean_gap);
  for (const char* f : {"relation.csv", "rate.csv", "eps_cold.csv",
                        "eps_cold_spread.csv", "reliability.csv",
                        "reliability_samples.csv", "nonuniform.csv",
                        "step_study.csv"}) {
    EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / f)) << f;
  }
}

TEST(Verify, SevenQubitCircuit) {
  RunConfig c = Small(7, 0.6);
  c.out_dir = TempDir("verify").string();
  std::ostringstream report;
  const auto r = CmdVerifyExact(
      std::string(BOOSTSIM_DATA_DIR) + "/seven_qubit_circuit.txt", c, report);
  EXPECT_GT(r.after[0].intrinsic_bias, 0.6);
  EXPECT_NEAR(r.after_entropy.von_neumann, r.before_entropy.von_neumann, 1e-9);
  EXPECT_NE(report.str().find("(boosted)"), std::string::npos);
  EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / "verify.csv"));

  const auto same = VerifyExact(Circuit(7), c.InitialBiases(), 16);
  for (int q = 0; q < 7; ++q) {
    EXPECT_EQ(same.before[q].bias, same.after[q].bias);
  }
  EXPECT_THROW(VerifyExact(Circuit(6), c.InitialBiases(), 16), WidthError);
}

}  // namespace
}  // namespace boostsim
