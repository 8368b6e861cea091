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
#include <functional>
#include <vector>

#include "liom/channel.hpp"
#include "liom/density_matrix.hpp"
#include "liom/rng.hpp"

namespace liom {

// Layered model: L repetitions of (Haar-random unitary, then a fixed noise
// channel) applied to an initial state. Haar sampling realizes the
// 2-design layer distribution exactly.

struct ToyModelConfig {
  int n_qubits = 0;
  int layers = 0;
  Channel channel;
  DensityMatrix initial_state;
  int samples = 1;
  std::uint64_t seed = 0;
};

/// Per-sample purity trajectories; row k holds Tr(rho_l^2) for l = 0..L,
/// with the initial purity at l = 0 and subsequent entries recorded after
/// each noise application.
struct PurityTrace {
  int layers = 0;
  std::vector<std::vector<double>> rows;
};

struct InstanceResult {
  std::vector<double> purities;
  DensityMatrix final_state;
};

/// One circuit instance driven by an explicit random stream.
InstanceResult simulate_instance(int n_qubits, int layers, const Channel& channel,
                                 const DensityMatrix& initial, Rng& rng);

/// Monte-Carlo batch; sample k consumes the stream (cfg.seed, k), so the
/// trace is independent of the thread count.
PurityTrace simulate(const ToyModelConfig& cfg, int threads = 1);

/// Closed-form Haar average of Tr(rho_out_i rho_out_j) after `layers`
/// (unitary, noise) rounds applied to both states:
///   r^L Tr(rho_i rho_j) + (1 - r^L)/(1 - r) * 2^n (2^n eta - nu)/(4^n - 1),
/// with the L * c + Tr(rho_i rho_j) limit taken when r = 1.
double exact_avg_overlap(const Channel& ch, const DensityMatrix& rho_i,
                         const DensityMatrix& rho_j, int layers);

/// Weak-noise approximation (1 - 2 p_eff)^L Tr(rho_in^2); intended for the
/// regime where the purity stays well above 1/2^n.
double approx_avg_purity(const Channel& ch, const DensityMatrix& rho_in, int layers);

/// Multiplicative concentration band around approx_avg_purity. Entry l of
/// each vector bounds the purity after l layers; at most a fraction p_max
/// of instances is expected outside. Throws std::domain_error when
/// N_hat^T N_hat is singular (the log-range is undefined).
struct HoeffdingBand {
  std::vector<double> lower;
  std::vector<double> upper;
};
HoeffdingBand hoeffding_band(const Channel& ch, const DensityMatrix& rho_in, int layers,
                             double p_max);

/// Coefficients feeding the gradient-variance formula. beta[j-1] holds
/// beta_j of the recursion beta_j = (eta - 1/2^n)/(4^n - 1) + r beta_{j-1}
/// seeded by beta_1 = (Tr rho_in^2 - 1/2^n)/(4^n - 1); alpha_j = 1/2^n.
struct VarianceCoefficients {
  std::vector<double> alpha;
  std::vector<double> beta;
  double eta_minus_avg = 0.0;
  double eta_minus_se = 0.0;
  double nu_minus_avg = 0.0;
  double nu_minus_se = 0.0;
  double g = 0.0;
  double g_se = 0.0;
};

std::vector<double> beta_sequence(const Channel& ch, double initial_purity, int count);

/// Samples the PTM of a sub-layer unitary U_{l-}.
using SublayerSampler = std::function<RMatrix(int n_qubits, Rng&)>;

/// Estimates the averaged sandwich coefficients
///   <eta^-> = E Tr[V~ N|P0)(P0|N^T V~ Pi],   <nu^-> = E Tr[V~ N N^T V~ Pi],
/// with V~ the commutator superoperator of `generator` conjugated by a
/// sampled sub-layer unitary, and assembles the prefactor G of the variance
/// formula. For ell = 1 the sandwich acts on |rho_in)(rho_in| directly; for
/// ell >= 2 exact projector algebra gives
///   G = <eta^->/2^n + (<nu^-> - <eta^->) beta_{ell-1}.
/// The default sampler draws a Haar companion unitary, realizing the layer
/// family exp(-i theta V) W; the differentiated rotation commutes with its
/// own generator, so the companion distribution fully determines the
/// averages.
VarianceCoefficients estimate_g_coefficients(const Channel& ch, const CMatrix& generator,
                                             int ell, const DensityMatrix& rho_in,
                                             int samples, Rng& rng,
                                             const SublayerSampler& sampler = {});

/// G * r^{L - ell} / (4^n - 1) * Tr[(N^adj(O))^2] for a Hermitian traceless
/// observable O.
double variance_predictor(const Channel& ch, const CMatrix& observable, int layers, int ell,
                          double g);

struct VarianceCheckResult {
  double mc_variance = 0.0;
  double mc_se = 0.0;
  double predicted = 0.0;
  double predicted_se = 0.0;
};

/// Monte-Carlo estimate of Var(dC/d theta_{ell}) for layers built as
/// W2_l exp(-i theta_l V) W1_l with both companions Haar-resampled per
/// sample and theta_l uniform in [0, 2 pi), against the closed-form
/// predictor. The two-sided embedding keeps each layer exactly
/// Haar-distributed and the full layer independent of the conjugated
/// generator, which the predictor's factorized averages assume. The
/// derivative is taken by central finite differences with step `fd_step`.
VarianceCheckResult variance_mc_check(int n_qubits, const Channel& ch,
                                      const CMatrix& generator, const CMatrix& observable,
                                      int layers, int ell, int samples, std::uint64_t seed,
                                      int threads = 1, double fd_step = 1e-4,
                                      int predictor_samples = 20000);

}  // namespace liom
