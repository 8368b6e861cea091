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

#include <cstdio>
#include <fstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liom_cli/experiments.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitGraph = 3;
constexpr int kExitNumerical = 4;

void add_common_flags(CLI::App* cmd, liom::cli::ExperimentConfig& cfg,
                      std::string& config_path) {
  cmd->add_option("--config", config_path, "JSON config mirroring the flags");
  cmd->add_option("--n", cfg.n_qubits, "qubit count");
  cmd->add_option("--channel", cfg.channel_spec, "channel spec, e.g. ad:0.004^6");
  cmd->add_option("--layers", cfg.l_max, "maximum depth L");
  cmd->add_option("--lstep", cfg.l_step, "depth stride for per-L scans");
  cmd->add_option("--samples", cfg.samples, "Monte-Carlo samples");
  cmd->add_option("--seed", cfg.seed, "run seed (64-bit)");
  cmd->add_option("--out", cfg.out_path, "output CSV path");
  cmd->add_option("--manifest", cfg.manifest_path, "run manifest JSON path");
  cmd->add_option("--threads", cfg.threads, "worker threads (output independent of it)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered-noise circuit experiments"};
  app.require_subcommand(1);

  struct SubcommandState {
    liom::cli::ExperimentConfig cfg;
    std::string config_path;
  };
  std::vector<std::pair<CLI::App*, SubcommandState>> subs;
  subs.reserve(7);

  const auto add_kind = [&](const std::string& name, const std::string& help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    subs.emplace_back(cmd, SubcommandState{});
    SubcommandState& state = subs.back().second;
    state.cfg.kind = liom::cli::kind_from_string(name);
    add_common_flags(cmd, state.cfg, state.config_path);
    return cmd;
  };

  add_kind("toy-purity", "Purity trace of the Haar-layered model with predictors and bounds");
  {
    CLI::App* cmd = add_kind("qaoa-purity", "Per-depth purity statistics of noisy QAOA");
    cmd->add_option("--graph", subs.back().second.cfg.graph_spec,
                    "graph spec: reg:<n>:<d>:<seed> | er:<n>:<p>:<seed> | file:<path>");
  }
  {
    CLI::App* cmd = add_kind("qaoa-grad", "Per-depth derivative statistics of noisy QAOA");
    cmd->add_option("--graph", subs.back().second.cfg.graph_spec, "graph spec");
  }
  {
    CLI::App* cmd =
        add_kind("twirl-fidelity", "Fidelity of the circuit-averaged channel to its "
                                   "depolarizing replacement");
    auto& cfg = subs.back().second.cfg;
    cmd->add_option("--graph", cfg.graph_spec, "graph spec");
    cmd->add_flag("--universal", cfg.universal, "use the weighted-chain universal circuit");
    cmd->add_option("--omega-a", cfg.omega_a, "universal circuit omega_A");
    cmd->add_option("--omega-b", cfg.omega_b, "universal circuit omega_B");
    cmd->add_option("--gamma-ab", cfg.gamma_ab, "universal circuit gamma_AB");
    cmd->add_option("--gamma-ba", cfg.gamma_ba, "universal circuit gamma_BA");
  }
  {
    CLI::App* cmd = add_kind("haar-infidelity",
                             "Infidelity between true-noise and depolarizing-noise states");
    cmd->add_option("--graph", subs.back().second.cfg.graph_spec, "graph spec");
  }
  add_kind("coeffs", "Print the channel's noise coefficients");
  {
    CLI::App* cmd = add_kind("variance-check",
                             "Monte-Carlo gradient variance against the closed-form predictor");
    cmd->add_option("--pmax", subs.back().second.cfg.p_max, "(unused placeholder)");
  }
  // toy-purity extras.
  subs[0].first->add_option("--pmax", subs[0].second.cfg.p_max,
                            "band miss probability for the concentration bounds");

  CLI11_PARSE(app, argc, argv);

  for (auto& [cmd, state] : subs) {
    if (!cmd->parsed()) continue;
    try {
      if (!state.config_path.empty()) {
        // A config file replaces the flag set; the experiment kind stays
        // the one named by the subcommand.
        std::ifstream f(state.config_path);
        if (!f) throw liom::cli::SpecParseError("cannot open config " + state.config_path);
        nlohmann::json j = nlohmann::json::parse(f);
        const auto kind = state.cfg.kind;
        state.cfg = liom::cli::config_from_json(j);
        state.cfg.kind = kind;
      }
      liom::cli::run(state.cfg);
      return 0;
    } catch (const liom::cli::SpecParseError& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kExitParse;
    } catch (const liom::cli::GraphInfeasibleError& e) {
      std::fprintf(stderr, "error: infeasible graph: %s\n", e.what());
      return kExitGraph;
    } catch (const nlohmann::json::exception& e) {
      std::fprintf(stderr, "error: config: %s\n", e.what());
      return kExitParse;
    } catch (const std::invalid_argument& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kExitParse;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "numerical failure: %s\n", e.what());
      return kExitNumerical;
    }
  }
  return 0;
}
