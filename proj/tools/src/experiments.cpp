// Copyright 2026 The liom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liom_cli/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "liom/io.hpp"
#include "liom/parallel.hpp"
#include "liom/pauli.hpp"
#include "liom/qaoa.hpp"
#include "liom/toy_model.hpp"
#include "liom/version.hpp"

namespace liom::cli {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw SpecParseError("cannot parse " + what + " from '" + text + "'");
  }
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw SpecParseError("cannot parse " + what + " from '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

Channel single_qubit_depolarizing_kraus(double p) {
  const double upper = 1.0 + 1.0 / 3.0;
  if (!(p >= 0.0 && p <= upper))
    throw SpecParseError("depol strength out of [0, 4/3]");
  const double keep = 1.0 - 0.75 * p;
  const double flip = 0.25 * p;
  std::vector<CMatrix> kraus;
  for (std::uint64_t code = 0; code < 4; ++code) {
    const double w = code == 0 ? keep : flip;
    if (w <= 0.0 && code == 0) {
      kraus.push_back(CMatrix::Zero(2, 2));
      continue;
    }
    kraus.push_back(std::sqrt(w) * pauli_op(PauliIndex::from_code(1, code)));
  }
  return Channel::from_kraus(std::move(kraus), 1, "depol(" + std::to_string(p) + ")");
}

std::vector<int> depth_list(int l_max, int l_step) {
  std::vector<int> depths;
  for (int l = std::max(1, l_step); l <= l_max; l += std::max(1, l_step)) depths.push_back(l);
  return depths;
}

QaoaInstance instance_from_config(const ExperimentConfig& cfg, const Channel& channel) {
  const Graph graph = parse_graph_spec(cfg.graph_spec);
  if (graph.n_vertices != cfg.n_qubits)
    throw SpecParseError("graph has " + std::to_string(graph.n_vertices) +
                         " vertices but --n is " + std::to_string(cfg.n_qubits));
  return maxcut_instance(graph, channel, cfg.l_max);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << content;
}

}  // namespace

ExperimentKind kind_from_string(const std::string& name) {
  const std::string k = lowercase(name);
  if (k == "toy-purity") return ExperimentKind::kToyPurity;
  if (k == "qaoa-purity") return ExperimentKind::kQaoaPurity;
  if (k == "qaoa-grad") return ExperimentKind::kQaoaGrad;
  if (k == "twirl-fidelity") return ExperimentKind::kTwirlFidelity;
  if (k == "haar-infidelity") return ExperimentKind::kHaarInfidelity;
  if (k == "coeffs") return ExperimentKind::kCoeffs;
  if (k == "variance-check") return ExperimentKind::kVarianceCheck;
  throw SpecParseError("unknown experiment kind '" + name + "'");
}

std::string kind_to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kToyPurity: return "toy-purity";
    case ExperimentKind::kQaoaPurity: return "qaoa-purity";
    case ExperimentKind::kQaoaGrad: return "qaoa-grad";
    case ExperimentKind::kTwirlFidelity: return "twirl-fidelity";
    case ExperimentKind::kHaarInfidelity: return "haar-infidelity";
    case ExperimentKind::kCoeffs: return "coeffs";
    case ExperimentKind::kVarianceCheck: return "variance-check";
  }
  throw std::logic_error("unknown kind");
}

Channel parse_channel_spec(const std::string& text, int n_qubits) {
  const std::string spec = lowercase(text);
  std::string base = spec;
  int power = 0;
  if (const std::size_t caret = spec.find('^'); caret != std::string::npos) {
    base = spec.substr(0, caret);
    const long p = parse_long(spec.substr(caret + 1), "tensor power");
    if (p < 1) throw SpecParseError("tensor power must be >= 1");
    power = static_cast<int>(p);
  }

  const std::size_t colon = base.find(':');
  if (colon == std::string::npos)
    throw SpecParseError("channel spec '" + text + "' is missing ':'");
  const std::string name = base.substr(0, colon);
  const std::string arg = base.substr(colon + 1);

  Channel ch;
  if (name == "ad") {
    const double gamma = parse_double(arg, "gamma");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw SpecParseError("gamma out of [0,1]");
    ch = amplitude_damping(gamma);
    if (power > 0) ch = tensor_power(ch, power);
  } else if (name == "depol") {
    const double p = parse_double(arg, "depolarizing strength");
    if (power > 0) {
      ch = tensor_power(single_qubit_depolarizing_kraus(p), power);
    } else {
      const double upper = 1.0 + 1.0 / (static_cast<double>(sdim(n_qubits)) - 1.0);
      if (!(p >= 0.0 && p <= upper))
        throw SpecParseError("depol strength out of the twirl range");
      ch = depolarizing(p, n_qubits);
    }
  } else {
    throw SpecParseError("unknown channel '" + name + "'");
  }

  if (ch.n_qubits() != n_qubits)
    throw SpecParseError("channel acts on " + std::to_string(ch.n_qubits()) +
                         " qubits but --n is " + std::to_string(n_qubits) +
                         (ch.n_qubits() == 1 ? " (did you mean '" + text + "^" +
                                                   std::to_string(n_qubits) + "'?)"
                                             : ""));
  return ch;
}

Graph parse_graph_spec(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  const std::string kind = lowercase(parts[0]);
  if (kind == "file") {
    if (parts.size() != 2) throw SpecParseError("graph spec 'file:<path>' malformed");
    try {
      return read_graph(text.substr(5));
    } catch (const std::exception& e) {
      throw SpecParseError(std::string("graph file: ") + e.what());
    }
  }
  if (kind == "reg") {
    if (parts.size() != 4) throw SpecParseError("graph spec 'reg:<n>:<d>:<seed>' malformed");
    const int n = static_cast<int>(parse_long(parts[1], "vertex count"));
    const int d = static_cast<int>(parse_long(parts[2], "degree"));
    const auto seed = static_cast<std::uint64_t>(parse_long(parts[3], "seed"));
    Rng rng(seed);
    try {
      Graph g = random_regular_graph(n, d, rng);
      g.label = text;
      return g;
    } catch (const std::exception& e) {
      throw GraphInfeasibleError(e.what());
    }
  }
  if (kind == "er") {
    if (parts.size() != 4) throw SpecParseError("graph spec 'er:<n>:<p>:<seed>' malformed");
    const int n = static_cast<int>(parse_long(parts[1], "vertex count"));
    const double p = parse_double(parts[2], "edge probability");
    const auto seed = static_cast<std::uint64_t>(parse_long(parts[3], "seed"));
    if (!(p >= 0.0 && p <= 1.0)) throw SpecParseError("edge probability out of [0,1]");
    Rng rng(seed);
    Graph g = erdos_renyi(n, p, rng);
    g.label = text;
    return g;
  }
  throw SpecParseError("unknown graph spec '" + text + "'");
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  cfg.kind = kind_from_string(j.at("kind").get<std::string>());
  cfg.n_qubits = j.value("n", 1);
  cfg.channel_spec = j.value("channel", std::string{});
  cfg.graph_spec = j.value("graph", std::string{});
  cfg.l_max = j.value("layers", 0);
  cfg.l_step = j.value("lstep", 1);
  cfg.samples = j.value("samples", 1);
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.p_max = j.value("pmax", 0.01);
  cfg.universal = j.value("universal", false);
  cfg.omega_a = j.value("omega_a", 0.45);
  cfg.omega_b = j.value("omega_b", 0.54);
  cfg.gamma_ab = j.value("gamma_ab", 0.22);
  cfg.gamma_ba = j.value("gamma_ba", 0.52);
  cfg.out_path = j.value("out", std::string{});
  cfg.manifest_path = j.value("manifest", std::string{});
  cfg.threads = j.value("threads", 1);
  return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["kind"] = kind_to_string(cfg.kind);
  j["n"] = cfg.n_qubits;
  j["channel"] = cfg.channel_spec;
  j["graph"] = cfg.graph_spec;
  j["layers"] = cfg.l_max;
  j["lstep"] = cfg.l_step;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["pmax"] = cfg.p_max;
  j["universal"] = cfg.universal;
  j["omega_a"] = cfg.omega_a;
  j["omega_b"] = cfg.omega_b;
  j["gamma_ab"] = cfg.gamma_ab;
  j["gamma_ba"] = cfg.gamma_ba;
  j["out"] = cfg.out_path;
  j["manifest"] = cfg.manifest_path;
  j["threads"] = cfg.threads;
  return j;
}

nlohmann::json make_manifest(const ExperimentConfig& cfg, double wall_time_s) {
  nlohmann::json j;
  j["config"] = config_to_json(cfg);
  j["library_version"] = kVersion;
  j["wall_time_s"] = wall_time_s;
  nlohmann::json derived;
  if (!cfg.channel_spec.empty()) {
    const Channel ch = parse_channel_spec(cfg.channel_spec, cfg.n_qubits);
    const NoiseCoefficients& c = ch.coefficients();
    derived["p_eff"] = c.p_eff;
    derived["r"] = c.r;
    derived["eta"] = c.eta;
    derived["nu"] = c.nu;
    const auto [lo, hi] = ch.gram_eigen_range();
    if (lo > 0.0)
      derived["r_ln"] = std::log(hi) - std::log(lo);
    else
      derived["r_ln"] = nullptr;
  }
  j["derived"] = derived;
  return j;
}

namespace {

void run_toy_purity(const ExperimentConfig& cfg, const Channel& channel) {
  ToyModelConfig toy;
  toy.n_qubits = cfg.n_qubits;
  toy.layers = cfg.l_max;
  toy.channel = channel;
  toy.initial_state = DensityMatrix::plus_state(cfg.n_qubits);
  toy.samples = cfg.samples;
  toy.seed = cfg.seed;
  const PurityTrace trace = simulate(toy, cfg.threads);
  const HoeffdingBand band = hoeffding_band(channel, toy.initial_state, cfg.l_max, cfg.p_max);

  CsvWriter csv({"layer", "mean_purity", "var_purity", "exact_pred", "approx_pred",
                 "hoeffding_lo", "hoeffding_hi"});
  std::vector<double> column(cfg.samples);
  for (int l = 0; l <= cfg.l_max; ++l) {
    for (int k = 0; k < cfg.samples; ++k) column[k] = trace.rows[k][l];
    csv.add_row(l, {pairwise_mean(column), pairwise_variance(column),
                    exact_avg_overlap(channel, toy.initial_state, toy.initial_state, l),
                    approx_avg_purity(channel, toy.initial_state, l), band.lower[l],
                    band.upper[l]});
  }
  csv.write_file(cfg.out_path);
}

void run_qaoa_purity(const ExperimentConfig& cfg, const Channel& channel) {
  const QaoaInstance inst = instance_from_config(cfg, channel);
  const PurityStats stats =
      purity_statistics(inst, cfg.l_max, cfg.samples, cfg.seed, cfg.threads);
  CsvWriter csv({"L", "mean_purity", "var_purity"});
  for (int l = 0; l <= cfg.l_max; ++l) csv.add_row(l, {stats.mean[l], stats.variance[l]});
  csv.write_file(cfg.out_path);
}

void run_qaoa_grad(const ExperimentConfig& cfg, const Channel& channel) {
  const QaoaInstance inst = instance_from_config(cfg, channel);
  const DerivativeStats stats =
      derivative_statistics(inst, cfg.l_max, cfg.samples, cfg.seed, cfg.threads);
  CsvWriter csv({"L", "mean_abs_dgamma1", "var_dgamma1", "mean_abs_dalphaL", "var_dalphaL"});
  for (std::size_t i = 0; i < stats.depths.size(); ++i)
    csv.add_row(stats.depths[i],
                {stats.mean_abs_dgamma1[i], stats.var_dgamma1[i],
                 stats.mean_abs_dalpha_last[i], stats.var_dalpha_last[i]});
  csv.write_file(cfg.out_path);
}

void run_twirl_fidelity(const ExperimentConfig& cfg, const Channel& channel) {
  QaoaInstance circuit;
  if (cfg.universal) {
    UniversalQaoaSpec spec;
    spec.n_qubits = cfg.n_qubits;
    spec.omega_a = cfg.omega_a;
    spec.omega_b = cfg.omega_b;
    spec.gamma_ab = cfg.gamma_ab;
    spec.gamma_ba = cfg.gamma_ba;
    try {
      circuit = universal_qaoa_instance(spec, channel, cfg.l_max);
    } catch (const std::invalid_argument& e) {
      throw SpecParseError(e.what());
    }
  } else {
    circuit = instance_from_config(cfg, channel);
  }
  const TwirlFidelityCurve curve = twirl_fidelity(
      circuit, channel, depth_list(cfg.l_max, cfg.l_step), cfg.samples, cfg.seed, cfg.threads);
  CsvWriter csv({"L", "fidelity"});
  for (std::size_t i = 0; i < curve.depths.size(); ++i)
    csv.add_row(curve.depths[i], {curve.fidelity[i]});
  csv.write_file(cfg.out_path);
}

void run_haar_infidelity(const ExperimentConfig& cfg, const Channel& channel) {
  const QaoaInstance inst = instance_from_config(cfg, channel);
  const InfidelityCurve curve = haar_model_infidelity(
      inst, depth_list(cfg.l_max, cfg.l_step), cfg.samples, cfg.seed, cfg.threads);
  CsvWriter csv({"L", "mean_infidelity"});
  for (std::size_t i = 0; i < curve.depths.size(); ++i)
    csv.add_row(curve.depths[i], {curve.mean_infidelity[i]});
  csv.write_file(cfg.out_path);
}

void run_coeffs(const ExperimentConfig& cfg, const Channel& channel) {
  const NoiseCoefficients& c = channel.coefficients();
  std::printf("nu    = %s\n", CsvWriter::format(c.nu).c_str());
  std::printf("eta   = %s\n", CsvWriter::format(c.eta).c_str());
  std::printf("r     = %s\n", CsvWriter::format(c.r).c_str());
  std::printf("p_eff = %s\n", CsvWriter::format(c.p_eff).c_str());
  if (!cfg.out_path.empty()) {
    CsvWriter csv({"nu", "eta", "r", "p_eff"});
    csv.add_row({c.nu, c.eta, c.r, c.p_eff});
    csv.write_file(cfg.out_path);
  }
}

void run_variance_check(const ExperimentConfig& cfg, const Channel& channel) {
  // Generator X on qubit 0, observable Z on qubit 0, derivative at the
  // first layer's parameter.
  const int n = cfg.n_qubits;
  const std::uint64_t shift = 2 * (n - 1);
  const CMatrix generator = pauli_op(PauliIndex::from_code(n, std::uint64_t{1} << shift));
  const CMatrix observable = pauli_op(PauliIndex::from_code(n, std::uint64_t{3} << shift));
  CsvWriter csv({"L", "mc_variance", "mc_se", "predicted", "predicted_se"});
  for (int l = 1; l <= cfg.l_max; ++l) {
    const VarianceCheckResult res = variance_mc_check(
        n, channel, generator, observable, l, 1, cfg.samples,
        Rng::for_sample(cfg.seed, 7919ULL * l).next_u64(), cfg.threads);
    csv.add_row(l, {res.mc_variance, res.mc_se, res.predicted, res.predicted_se});
  }
  csv.write_file(cfg.out_path);
}

}  // namespace

void run(const ExperimentConfig& cfg) {
  if (cfg.samples < 1) throw SpecParseError("samples must be >= 1");
  if (cfg.l_max < 0) throw SpecParseError("layers must be >= 0");
  if (cfg.n_qubits < 1) throw SpecParseError("n must be >= 1");
  const bool needs_out = cfg.kind != ExperimentKind::kCoeffs;
  if (needs_out && cfg.out_path.empty()) throw SpecParseError("--out is required");

  const auto start = std::chrono::steady_clock::now();
  const Channel channel = parse_channel_spec(cfg.channel_spec, cfg.n_qubits);
  switch (cfg.kind) {
    case ExperimentKind::kToyPurity: run_toy_purity(cfg, channel); break;
    case ExperimentKind::kQaoaPurity: run_qaoa_purity(cfg, channel); break;
    case ExperimentKind::kQaoaGrad: run_qaoa_grad(cfg, channel); break;
    case ExperimentKind::kTwirlFidelity: run_twirl_fidelity(cfg, channel); break;
    case ExperimentKind::kHaarInfidelity: run_haar_infidelity(cfg, channel); break;
    case ExperimentKind::kCoeffs: run_coeffs(cfg, channel); break;
    case ExperimentKind::kVarianceCheck: run_variance_check(cfg, channel); break;
  }
  if (!cfg.manifest_path.empty()) {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_text_file(cfg.manifest_path, make_manifest(cfg, wall).dump(2) + "\n");
  }
}

}  // namespace liom::cli
