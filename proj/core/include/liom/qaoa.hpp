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
#include <string>
#include <vector>

#include "liom/channel.hpp"
#include "liom/density_matrix.hpp"
#include "liom/graph.hpp"

namespace liom {

// Noisy QAOA: from |+>^n, each layer applies the problem phase
// exp(-i gamma H_P), the mixer exp(-i alpha sum_i X_i), and then the noise
// channel. H_P is diagonal in the computational basis and kept as its
// diagonal; full 2^n x 2^n unitaries are never materialized.

/// Mixer angles alpha and problem angles gamma, one pair per layer.
struct QaoaParams {
  std::vector<double> alphas;
  std::vector<double> gammas;

  std::size_t layers() const { return alphas.size(); }
  void validate() const;
};

struct QaoaInstance {
  Graph graph;
  RVector hp_diag;
  Channel channel;
  int layers = 0;
  int n_qubits = 0;
  std::string label;
};

/// Diagonal of H_P = sum_{(i,j) in E} Z_i Z_j over computational states.
RVector maxcut_hp_diag(const Graph& graph);

QaoaInstance maxcut_instance(const Graph& graph, Channel channel, int layers);

/// Weighted one-dimensional chain Hamiltonian
///   H_P = sum_j omega_A Z_{2j} + omega_B Z_{2j+1}
///       + gamma_AB Z_{2j} Z_{2j+1} + gamma_BA Z_{2j+1} Z_{2j+2},
/// whose alternating circuit is computation-universal at depth for odd
/// qubit counts when the listed non-degeneracy conditions hold.
struct UniversalQaoaSpec {
  int n_qubits = 0;
  double omega_a = 0.0;
  double omega_b = 0.0;
  double gamma_ab = 0.0;
  double gamma_ba = 0.0;
};

/// Throws std::invalid_argument naming the violated universality condition.
QaoaInstance universal_qaoa_instance(const UniversalQaoaSpec& spec, Channel channel,
                                     int layers);

/// Uniform angles in [0, 2 pi); per layer gamma is drawn before alpha.
QaoaParams random_params(int layers, Rng& rng);

/// State after `params.layers()` noisy layers; requires the parameter count
/// to match the instance depth.
DensityMatrix qaoa_state(const QaoaInstance& inst, const QaoaParams& params);

/// Tr[H_P rho(params)].
double cost(const QaoaInstance& inst, const QaoaParams& params);

/// Identifies one circuit parameter; layers are 1-based.
struct ParamId {
  enum class Kind { kGamma, kAlpha };
  Kind kind = Kind::kGamma;
  int layer = 1;

  static ParamId first_gamma() { return {Kind::kGamma, 1}; }
  static ParamId last_alpha(int layers) { return {Kind::kAlpha, layers}; }
};

/// Central finite difference of the cost.
double gradient_fd(const QaoaInstance& inst, const QaoaParams& params, ParamId which,
                   double step = 1e-4);

/// Mean and unbiased variance of Tr(rho_L^2) over uniformly sampled
/// parameters, for every depth L = 0..l_max. Each sample evolves one
/// trajectory to l_max and records the purity after every layer, which has
/// the same per-depth distribution as independent draws.
struct PurityStats {
  std::vector<double> mean;
  std::vector<double> variance;
};
PurityStats purity_statistics(const QaoaInstance& inst, int l_max, int samples,
                              std::uint64_t seed, int threads = 1);

/// Statistics of dC/d gamma_1 and dC/d alpha_L per depth L = 1..l_max.
struct DerivativeStats {
  std::vector<int> depths;
  std::vector<double> mean_abs_dgamma1;
  std::vector<double> var_dgamma1;
  std::vector<double> mean_abs_dalpha_last;
  std::vector<double> var_dalpha_last;
};
DerivativeStats derivative_statistics(const QaoaInstance& inst, int l_max, int samples,
                                      std::uint64_t seed, int threads = 1,
                                      double step = 1e-4);

/// Fidelity between the parameter-averaged conjugated channel applied to
/// |+><+| and the ideal depolarizing replacement:
///   F( E_params U^dag(N(U |+><+| U^dag)) U , (1-p_eff)|+><+| + p_eff I/2^n ).
/// The noise acts once, between the forward and inverse circuits. The
/// standard error is jackknifed over sample batches.
struct TwirlFidelityCurve {
  std::vector<int> depths;
  std::vector<double> fidelity;
  std::vector<double> fidelity_se;
};
TwirlFidelityCurve twirl_fidelity(const QaoaInstance& circuit, const Channel& noise,
                                  const std::vector<int>& depth_list, int samples,
                                  std::uint64_t seed, int threads = 1);

/// Mean infidelity between the state evolved with the instance channel and
/// the state evolved with its depolarizing replacement, per depth.
struct InfidelityCurve {
  std::vector<int> depths;
  std::vector<double> mean_infidelity;
};
InfidelityCurve haar_model_infidelity(const QaoaInstance& inst,
                                      const std::vector<int>& depth_list, int samples,
                                      std::uint64_t seed, int threads = 1);

}  // namespace liom
