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

#include "boostsim/run_config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace boostsim {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double ToDouble(std::string_view text, std::string_view what) {
  const std::string s(Trim(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(v)) {
    throw ConfigError(std::string(what) + ": not a number: '" + s + "'");
  }
  return v;
}

template <typename Int>
Int ToInt(std::string_view text, std::string_view what) {
  const std::string_view s = Trim(text);
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(std::string(what) + ": not an integer: '" +
                      std::string(s) + "'");
  }
  return v;
}

// Molecule counts also accept exact scientific notation such as 5e6.
std::size_t ToCount(std::string_view text, std::string_view what) {
  const std::string_view s = Trim(text);
  if (s.find_first_of("eE.") == std::string_view::npos) {
    return ToInt<std::size_t>(s, what);
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() ||
      !(v >= 0.0 && v < 1e18) || v != std::floor(v)) {
    throw ConfigError(std::string(what) + ": not an integer: '" +
                      std::string(s) + "'");
  }
  return static_cast<std::size_t>(v);
}

bool ToBool(std::string_view text, std::string_view what) {
  const std::string_view s = Trim(text);
  if (s == "1" || s == "true" || s == "yes") return true;
  if (s == "0" || s == "false" || s == "no") return false;
  throw ConfigError(std::string(what) + ": expected true or false");
}

void CheckBias(double e, std::string_view what) {
  if (!(std::abs(e) <= 1.0)) {
    throw ConfigError(std::string(what) + ": bias outside [-1, 1]");
  }
}

// Shortest text that reads back to the same double.
std::string Shortest(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

}  // namespace

std::vector<double> ParseDoubleList(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    if (!Trim(item).empty()) out.push_back(ToDouble(item, "list"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> ParseIntList(std::string_view text) {
  std::vector<int> out;
  for (double v : ParseDoubleList(text)) {
    if (v != std::floor(v)) throw ConfigError("list: expected integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

BiasSpec BiasSpec::Uniform(double bias) {
  BiasSpec s;
  s.kind = Kind::kUniform;
  s.value = bias;
  return s;
}

BiasSpec BiasSpec::Alternating(double bias_a, double chi) {
  BiasSpec s;
  s.kind = Kind::kAlternating;
  s.value = bias_a;
  s.chi = chi;
  return s;
}

BiasSpec BiasSpec::Parse(std::string_view text) {
  text = Trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("bias: expected uniform:E, list:E1,E2,... or alt:E,chi=X");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  BiasSpec s;
  if (kind == "uniform") {
    s = Uniform(ToDouble(rest, "bias"));
    CheckBias(s.value, "bias");
  } else if (kind == "list") {
    s.kind = Kind::kList;
    s.list = ParseDoubleList(rest);
    if (s.list.empty()) throw ConfigError("bias: empty list");
    for (double e : s.list) CheckBias(e, "bias");
  } else if (kind == "alt") {
    const auto comma = rest.find(',');
    const std::string_view chi_part =
        comma == std::string_view::npos ? std::string_view{} : Trim(rest.substr(comma + 1));
    if (chi_part.substr(0, 4) != "chi=") {
      throw ConfigError("bias: alt needs the form alt:E,chi=X");
    }
    s = Alternating(ToDouble(rest.substr(0, comma), "bias"),
                    ToDouble(chi_part.substr(4), "bias chi"));
    CheckBias(s.value, "bias");
    if (!(s.chi > 0.0 && s.chi <= 1.0)) {
      throw ConfigError("bias: chi must lie in (0, 1]");
    }
  } else {
    throw ConfigError("bias: unknown kind '" + std::string(kind) + "'");
  }
  return s;
}

std::vector<double> BiasSpec::Expand(int n) const {
  switch (kind) {
    case Kind::kUniform:
      return std::vector<double>(n, value);
    case Kind::kList:
      if (static_cast<int>(list.size()) != n) {
        throw ConfigError("bias: list has " + std::to_string(list.size()) +
                          " values for n = " + std::to_string(n));
      }
      return list;
    case Kind::kAlternating: {
      std::vector<double> out(n);
      for (int i = 0; i < n; ++i) out[i] = (i % 2 == 0) ? value : value * chi;
      return out;
    }
  }
  return {};
}

std::string BiasSpec::ToString() const {
  std::ostringstream s;
  switch (kind) {
    case Kind::kUniform:
      s << "uniform:" << Shortest(value);
      break;
    case Kind::kList:
      s << "list:";
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) s << ',';
        s << Shortest(list[i]);
      }
      break;
    case Kind::kAlternating:
      s << "alt:" << Shortest(value) << ",chi=" << Shortest(chi);
      break;
  }
  return s.str();
}

std::size_t RunConfig::ResolvedMolecules() const {
  if (molecules != 0) return molecules;
  return static_cast<std::size_t>(10'000) * static_cast<std::size_t>(n);
}

std::vector<double> RunConfig::InitialBiases() const { return bias.Expand(n); }

GeneratorConfig RunConfig::ToGeneratorConfig(
    const std::vector<double>& biases) const {
  GeneratorConfig g = DefaultGeneratorConfig(biases);
  if (eps_cold) g.eps_cold = *eps_cold;
  if (stagnation_window) g.stagnation_window = *stagnation_window;
  g.max_depth = max_depth;
  g.joint_target = joint_target;
  g.target = target;
  g.record_biases = bias_file;
  return g;
}

void RunConfig::Validate() const {
  if (n < 1) throw ConfigError("n: must be at least 1");
  if (bias.kind == BiasSpec::Kind::kAlternating && n % 2 != 0) {
    throw ConfigError("bias: alternating structure needs an even n");
  }
  (void)bias.Expand(n);
  if (ResolvedMolecules() == 0) throw ConfigError("molecules: must be positive");
  if (eps_cold && !(*eps_cold >= 0.0 && *eps_cold < 1.0)) {
    throw ConfigError("eps_cold: must lie in [0, 1)");
  }
  if (stagnation_window && *stagnation_window < 1) {
    throw ConfigError("st: must be at least 1");
  }
  if (max_depth < 1) throw ConfigError("max_depth: must be at least 1");
  if (!(joint_target > 0.0 && joint_target <= 1.0)) {
    throw ConfigError("joint_target: must lie in (0, 1]");
  }
  if (target && (*target < 1 || *target > n)) {
    throw ConfigError("target: qubit outside 1..n");
  }
  if (jobs < 1) throw ConfigError("jobs: must be at least 1");
}

void SetConfigValue(RunConfig& c, std::string_view key, std::string_view value) {
  value = Trim(value);
  if (key == "n") {
    c.n = ToInt<int>(value, key);
  } else if (key == "bias") {
    c.bias = BiasSpec::Parse(value);
  } else if (key == "molecules") {
    c.molecules = value == "auto" ? 0 : ToCount(value, key);
    if (value != "auto" && c.molecules == 0) {
      throw ConfigError("molecules: must be positive or auto");
    }
  } else if (key == "seed") {
    c.seed = ToInt<uint64_t>(value, key);
  } else if (key == "eps_cold") {
    c.eps_cold = ToDouble(value, key);
  } else if (key == "st") {
    c.stagnation_window = ToInt<int>(value, key);
  } else if (key == "max_depth") {
    c.max_depth = ToInt<int>(value, key);
  } else if (key == "joint_target") {
    c.joint_target = ToDouble(value, key);
  } else if (key == "target") {
    c.target = ToInt<int>(value, key);
  } else if (key == "out") {
    c.out_dir = std::string(value);
  } else if (key == "bias_file") {
    c.bias_file = ToBool(value, key);
  } else if (key == "threads") {
    c.threads = ToInt<int>(value, key);
  } else if (key == "jobs") {
    c.jobs = ToInt<int>(value, key);
  } else if (key == "exact_cap") {
    c.exact_cap = ToInt<int>(value, key);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void ApplyConfigText(std::string_view text, RunConfig& config) {
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    try {
      SetConfigValue(config, Trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
}

void ApplyConfigFile(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  ApplyConfigText(buf.str(), config);
}

}  // namespace boostsim
