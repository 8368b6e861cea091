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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "liom/channel.hpp"
#include "liom/graph.hpp"

namespace liom::cli {

/// Malformed channel/graph spec string or invalid experiment parameters
/// (process exit code 2).
struct SpecParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally impossible graph request (exit code 3).
struct GraphInfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind {
  kToyPurity,
  kQaoaPurity,
  kQaoaGrad,
  kTwirlFidelity,
  kHaarInfidelity,
  kCoeffs,
  kVarianceCheck,
};

ExperimentKind kind_from_string(const std::string& name);
std::string kind_to_string(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kCoeffs;
  int n_qubits = 1;
  std::string channel_spec;
  std::string graph_spec;
  int l_max = 0;
  int l_step = 1;
  int samples = 1;
  std::uint64_t seed = 0;
  double p_max = 0.01;
  // Universal-circuit family for twirl-fidelity.
  bool universal = false;
  double omega_a = 0.45;
  double omega_b = 0.54;
  double gamma_ab = 0.22;
  double gamma_ba = 0.52;
  std::string out_path;
  std::string manifest_path;
  int threads = 1;
};

/// Channel grammar (case-insensitive): "ad:<gamma>" | "depol:<p>" |
/// "<base>^<k>". "depol:<p>" without a power is the global depolarizing
/// channel on `n_qubits`; with "^k" it is a k-fold product of single-qubit
/// depolarizing factors. The resulting channel must act on `n_qubits`.
Channel parse_channel_spec(const std::string& text, int n_qubits);

/// Graph grammar: "reg:<n>:<d>:<seed>" | "er:<n>:<p>:<seed>" |
/// "file:<path>". Generated graphs are deterministic in the seed.
Graph parse_graph_spec(const std::string& text);

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

/// Runs the experiment, writes the CSV (and manifest when requested), and
/// returns the process exit code (0 on success). Parse errors, infeasible
/// graphs and numerical failures are thrown as typed exceptions.
void run(const ExperimentConfig& cfg);

/// Manifest document: config echo, library version, wall time, and the
/// derived channel constants (p_eff, r, eta, nu, r_ln).
nlohmann::json make_manifest(const ExperimentConfig& cfg, double wall_time_s);

}  // namespace liom::cli
