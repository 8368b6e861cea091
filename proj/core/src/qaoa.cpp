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

#include "liom/qaoa.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "liom/functionals.hpp"
#include "liom/local_ops.hpp"
#include "liom/parallel.hpp"
#include "liom/tolerances.hpp"

namespace liom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Matrix2c mixer_rotation(double alpha) {
  // exp(-i alpha X)
  Matrix2c g;
  const double c = std::cos(alpha);
  const Complex ms{0.0, -std::sin(alpha)};
  g << c, ms, ms, c;
  return g;
}

struct EvolveWorkspace {
  CVector phases;
  CMatrix scratch;
  CMatrix accum;
};

void apply_problem_phase(CMatrix& rho, const RVector& hp_diag, double gamma,
                         EvolveWorkspace& ws) {
  const auto d = rho.rows();
  if (ws.phases.size() != d) ws.phases.resize(d);
  for (Eigen::Index a = 0; a < d; ++a)
    ws.phases(a) = std::exp(Complex{0.0, -gamma * hp_diag(a)});
  local::apply_diagonal_phase(rho, ws.phases);
}

void apply_mixer(CMatrix& rho, int n_qubits, double alpha) {
  const Matrix2c g = mixer_rotation(alpha);
  for (int q = 0; q < n_qubits; ++q) local::conjugate(rho, n_qubits, q, g);
}

void apply_layer(CMatrix& rho, const QaoaInstance& inst, double gamma, double alpha,
                 const Channel& channel, EvolveWorkspace& ws) {
  apply_problem_phase(rho, inst.hp_diag, gamma, ws);
  apply_mixer(rho, inst.n_qubits, alpha);
  channel.apply_in_place(rho, ws.scratch, ws.accum);
}

// Evolves |+><+| through `depth` layers; depth may be shorter than the
// parameter vectors.
CMatrix evolve(const QaoaInstance& inst, const QaoaParams& params, std::size_t depth,
               const Channel& channel, EvolveWorkspace& ws) {
  CMatrix rho = DensityMatrix::plus_state(inst.n_qubits).matrix();
  for (std::size_t l = 0; l < depth; ++l)
    apply_layer(rho, inst, params.gammas[l], params.alphas[l], channel, ws);
  return rho;
}

double cost_of(const QaoaInstance& inst, const CMatrix& rho) {
  double acc = 0.0;
  for (Eigen::Index a = 0; a < rho.rows(); ++a)
    acc += inst.hp_diag(a) * rho(a, a).real();
  return acc;
}

// Inverse circuit of `depth` layers (mixer then phase, reversed order,
// negated angles), without noise.
void apply_inverse_circuit(CMatrix& rho, const QaoaInstance& inst, const QaoaParams& params,
                           std::size_t depth, EvolveWorkspace& ws) {
  for (std::size_t l = depth; l-- > 0;) {
    apply_mixer(rho, inst.n_qubits, -params.alphas[l]);
    apply_problem_phase(rho, inst.hp_diag, -params.gammas[l], ws);
  }
}

void apply_forward_circuit(CMatrix& rho, const QaoaInstance& inst, const QaoaParams& params,
                           std::size_t depth, EvolveWorkspace& ws) {
  for (std::size_t l = 0; l < depth; ++l) {
    apply_problem_phase(rho, inst.hp_diag, params.gammas[l], ws);
    apply_mixer(rho, inst.n_qubits, params.alphas[l]);
  }
}

// Deterministic pairwise mean of per-sample states.
CMatrix pairwise_matrix_mean(std::vector<CMatrix>& slots) {
  const std::size_t n = slots.size();
  for (std::size_t stride = 1; stride < n; stride *= 2)
    for (std::size_t i = 0; i + stride < n; i += 2 * stride) slots[i] += slots[i + stride];
  return slots[0] / static_cast<double>(n);
}

double state_fidelity(int n_qubits, const CMatrix& a, const CMatrix& b) {
  return fidelity(DensityMatrix::from_matrix_unchecked(n_qubits, a),
                  DensityMatrix::from_matrix_unchecked(n_qubits, b));
}

}  // namespace

void QaoaParams::validate() const {
  if (alphas.size() != gammas.size())
    throw std::invalid_argument("QaoaParams: alpha/gamma length mismatch");
}

RVector maxcut_hp_diag(const Graph& graph) {
  graph.validate();
  const int n = graph.n_vertices;
  const auto d = dim(n);
  RVector diag = RVector::Zero(static_cast<Eigen::Index>(d));
  for (std::uint64_t a = 0; a < d; ++a) {
    int energy = 0;
    for (const auto& [u, v] : graph.edges) {
      const int zu = ((a >> (n - 1 - u)) & 1) ? -1 : 1;
      const int zv = ((a >> (n - 1 - v)) & 1) ? -1 : 1;
      energy += zu * zv;
    }
    diag(static_cast<Eigen::Index>(a)) = energy;
  }
  return diag;
}

QaoaInstance maxcut_instance(const Graph& graph, Channel channel, int layers) {
  if (channel.n_qubits() != graph.n_vertices)
    throw std::invalid_argument("maxcut_instance: channel/graph size mismatch");
  QaoaInstance inst;
  inst.graph = graph;
  inst.hp_diag = maxcut_hp_diag(graph);
  inst.channel = std::move(channel);
  inst.layers = layers;
  inst.n_qubits = graph.n_vertices;
  inst.label = "maxcut:" + graph.label;
  return inst;
}

QaoaInstance universal_qaoa_instance(const UniversalQaoaSpec& spec, Channel channel,
                                     int layers) {
  const int n = spec.n_qubits;
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("universal_qaoa_instance: qubit count must be odd and >= 3");
  constexpr double eps = 1e-12;
  if (std::abs(spec.omega_a * spec.omega_a - spec.omega_b * spec.omega_b) <= eps)
    throw std::invalid_argument("universal_qaoa_instance: condition omega_A^2 != omega_B^2 violated");
  if (std::abs(spec.gamma_ab * spec.gamma_ab - spec.gamma_ba * spec.gamma_ba) <= eps)
    throw std::invalid_argument("universal_qaoa_instance: condition gamma_AB^2 != gamma_BA^2 violated");
  if (std::abs(spec.gamma_ab * spec.gamma_ab - 4.0 * spec.gamma_ba * spec.gamma_ba) <= eps)
    throw std::invalid_argument(
        "universal_qaoa_instance: condition gamma_AB^2 - 4 gamma_BA^2 != 0 violated");
  if (std::abs(spec.gamma_ab) <= eps)
    throw std::invalid_argument("universal_qaoa_instance: condition gamma_AB != 0 violated");
  if (std::abs(spec.gamma_ba) <= eps)
    throw std::invalid_argument("universal_qaoa_instance: condition gamma_BA != 0 violated");
  if (channel.n_qubits() != n)
    throw std::invalid_argument("universal_qaoa_instance: channel size mismatch");

  const auto d = dim(n);
  RVector diag = RVector::Zero(static_cast<Eigen::Index>(d));
  for (std::uint64_t a = 0; a < d; ++a) {
    double energy = 0.0;
    for (int i = 0; i < n; ++i) {
      const int z = ((a >> (n - 1 - i)) & 1) ? -1 : 1;
      energy += (i % 2 == 0 ? spec.omega_a : spec.omega_b) * z;
    }
    for (int i = 0; i + 1 < n; ++i) {
      const int zi = ((a >> (n - 1 - i)) & 1) ? -1 : 1;
      const int zj = ((a >> (n - 2 - i)) & 1) ? -1 : 1;
      energy += (i % 2 == 0 ? spec.gamma_ab : spec.gamma_ba) * zi * zj;
    }
    diag(static_cast<Eigen::Index>(a)) = energy;
  }

  QaoaInstance inst;
  inst.graph.n_vertices = n;
  for (int i = 0; i + 1 < n; ++i) inst.graph.edges.emplace_back(i, i + 1);
  inst.graph.label = "chain(" + std::to_string(n) + ")";
  inst.hp_diag = std::move(diag);
  inst.channel = std::move(channel);
  inst.layers = layers;
  inst.n_qubits = n;
  inst.label = "universal";
  return inst;
}

QaoaParams random_params(int layers, Rng& rng) {
  QaoaParams p;
  p.gammas.resize(layers);
  p.alphas.resize(layers);
  for (int l = 0; l < layers; ++l) {
    p.gammas[l] = rng.uniform(0.0, kTwoPi);
    p.alphas[l] = rng.uniform(0.0, kTwoPi);
  }
  return p;
}

DensityMatrix qaoa_state(const QaoaInstance& inst, const QaoaParams& params) {
  params.validate();
  if (static_cast<int>(params.layers()) != inst.layers)
    throw std::invalid_argument("qaoa_state: parameter count does not match the depth");
  EvolveWorkspace ws;
  CMatrix rho = evolve(inst, params, params.layers(), inst.channel, ws);
  return DensityMatrix::from_matrix_unchecked(inst.n_qubits, std::move(rho));
}

double cost(const QaoaInstance& inst, const QaoaParams& params) {
  return cost_of(inst, qaoa_state(inst, params).matrix());
}

double gradient_fd(const QaoaInstance& inst, const QaoaParams& params, ParamId which,
                   double step) {
  params.validate();
  if (which.layer < 1 || which.layer > static_cast<int>(params.layers()))
    throw std::invalid_argument("gradient_fd: parameter layer out of range");
  QaoaParams shifted = params;
  double* slot = which.kind == ParamId::Kind::kGamma ? &shifted.gammas[which.layer - 1]
                                                     : &shifted.alphas[which.layer - 1];
  const double base = *slot;
  EvolveWorkspace ws;
  *slot = base + step;
  const double up = cost_of(inst, evolve(inst, shifted, shifted.layers(), inst.channel, ws));
  *slot = base - step;
  const double down = cost_of(inst, evolve(inst, shifted, shifted.layers(), inst.channel, ws));
  return (up - down) / (2.0 * step);
}

PurityStats purity_statistics(const QaoaInstance& inst, int l_max, int samples,
                              std::uint64_t seed, int threads) {
  if (samples < 2) throw std::invalid_argument("purity_statistics: samples must be >= 2");
  std::vector<std::vector<double>> traces(samples);
  parallel_for(samples, threads, [&](std::size_t k) {
    Rng rng = Rng::for_sample(seed, k);
    const QaoaParams params = random_params(l_max, rng);
    EvolveWorkspace ws;
    CMatrix rho = DensityMatrix::plus_state(inst.n_qubits).matrix();
    std::vector<double> purities(l_max + 1);
    purities[0] = rho.squaredNorm();
    for (int l = 0; l < l_max; ++l) {
      apply_layer(rho, inst, params.gammas[l], params.alphas[l], inst.channel, ws);
      purities[l + 1] = rho.squaredNorm();
    }
    traces[k] = std::move(purities);
  });

  PurityStats stats;
  stats.mean.resize(l_max + 1);
  stats.variance.resize(l_max + 1);
  std::vector<double> column(samples);
  for (int l = 0; l <= l_max; ++l) {
    for (int k = 0; k < samples; ++k) column[k] = traces[k][l];
    stats.mean[l] = pairwise_mean(column);
    stats.variance[l] = pairwise_variance(column);
  }
  return stats;
}

DerivativeStats derivative_statistics(const QaoaInstance& inst, int l_max, int samples,
                                      std::uint64_t seed, int threads, double step) {
  if (samples < 2) throw std::invalid_argument("derivative_statistics: samples must be >= 2");
  DerivativeStats stats;
  std::vector<double> dg(samples), da(samples);
  std::vector<double> abs_buf(samples);
  for (int depth = 1; depth <= l_max; ++depth) {
    const std::uint64_t depth_seed = Rng::for_sample(seed, 1000003ULL * depth).next_u64();
    parallel_for(samples, threads, [&](std::size_t k) {
      Rng rng = Rng::for_sample(depth_seed, k);
      QaoaParams params = random_params(depth, rng);
      EvolveWorkspace ws;

      // d/d gamma_1 needs two full evolutions.
      const double g0 = params.gammas[0];
      params.gammas[0] = g0 + step;
      const double cg_up = cost_of(inst, evolve(inst, params, depth, inst.channel, ws));
      params.gammas[0] = g0 - step;
      const double cg_down = cost_of(inst, evolve(inst, params, depth, inst.channel, ws));
      params.gammas[0] = g0;
      dg[k] = (cg_up - cg_down) / (2.0 * step);

      // d/d alpha_L shares the prefix up to the last problem phase.
      CMatrix prefix = evolve(inst, params, depth - 1, inst.channel, ws);
      apply_problem_phase(prefix, inst.hp_diag, params.gammas[depth - 1], ws);
      const double a_last = params.alphas[depth - 1];
      double tail_cost[2];
      int side = 0;
      for (const double shift : {step, -step}) {
        CMatrix rho = prefix;
        apply_mixer(rho, inst.n_qubits, a_last + shift);
        inst.channel.apply_in_place(rho, ws.scratch, ws.accum);
        tail_cost[side++] = cost_of(inst, rho);
      }
      da[k] = (tail_cost[0] - tail_cost[1]) / (2.0 * step);
    });
    stats.depths.push_back(depth);
    for (int k = 0; k < samples; ++k) abs_buf[k] = std::abs(dg[k]);
    stats.mean_abs_dgamma1.push_back(pairwise_mean(abs_buf));
    stats.var_dgamma1.push_back(pairwise_variance(dg));
    for (int k = 0; k < samples; ++k) abs_buf[k] = std::abs(da[k]);
    stats.mean_abs_dalpha_last.push_back(pairwise_mean(abs_buf));
    stats.var_dalpha_last.push_back(pairwise_variance(da));
  }
  return stats;
}

TwirlFidelityCurve twirl_fidelity(const QaoaInstance& circuit, const Channel& noise,
                                  const std::vector<int>& depth_list, int samples,
                                  std::uint64_t seed, int threads) {
  if (noise.n_qubits() != circuit.n_qubits)
    throw std::invalid_argument("twirl_fidelity: noise size mismatch");
  const int n = circuit.n_qubits;
  const auto d = static_cast<Eigen::Index>(dim(n));
  const CMatrix probe = DensityMatrix::plus_state(n).matrix();
  const double p_eff = noise.coefficients().p_eff;
  CMatrix haar_state = (1.0 - p_eff) * probe;
  haar_state.diagonal().array() += p_eff / static_cast<double>(d);

  TwirlFidelityCurve curve;
  for (const int depth : depth_list) {
    const std::uint64_t depth_seed = Rng::for_sample(seed, 1000003ULL * depth).next_u64();
    std::vector<CMatrix> slots(samples);
    parallel_for(samples, threads, [&](std::size_t k) {
      Rng rng = Rng::for_sample(depth_seed, k);
      const QaoaParams params = random_params(depth, rng);
      EvolveWorkspace ws;
      CMatrix rho = probe;
      apply_forward_circuit(rho, circuit, params, depth, ws);
      noise.apply_in_place(rho, ws.scratch, ws.accum);
      apply_inverse_circuit(rho, circuit, params, depth, ws);
      slots[k] = std::move(rho);
    });

    // Jackknife over batches for the standard error of the fidelity.
    constexpr int kBatches = 8;
    const int batch = samples / kBatches;
    std::vector<CMatrix> batch_sums;
    if (batch >= 1) {
      for (int b = 0; b < kBatches; ++b) {
        CMatrix sum = CMatrix::Zero(d, d);
        for (int k = b * batch; k < (b + 1) * batch; ++k) sum += slots[k];
        batch_sums.push_back(std::move(sum));
      }
    }
    const CMatrix mean_state = pairwise_matrix_mean(slots);
    const double f = state_fidelity(n, mean_state, haar_state);

    double se = 0.0;
    if (batch >= 1) {
      CMatrix total = CMatrix::Zero(d, d);
      for (const CMatrix& s : batch_sums) total += s;
      std::vector<double> loo(kBatches);
      for (int b = 0; b < kBatches; ++b) {
        const CMatrix rest = (total - batch_sums[b]) / static_cast<double>(batch * (kBatches - 1));
        loo[b] = state_fidelity(n, rest, haar_state);
      }
      const double loo_mean = pairwise_mean(loo);
      double acc = 0.0;
      for (const double v : loo) acc += (v - loo_mean) * (v - loo_mean);
      se = std::sqrt(acc * (kBatches - 1.0) / kBatches);
    }

    curve.depths.push_back(depth);
    curve.fidelity.push_back(f);
    curve.fidelity_se.push_back(se);
  }
  return curve;
}

InfidelityCurve haar_model_infidelity(const QaoaInstance& inst,
                                      const std::vector<int>& depth_list, int samples,
                                      std::uint64_t seed, int threads) {
  const Channel twirled = haar_twirl(inst.channel);
  InfidelityCurve curve;
  std::vector<double> infid(samples);
  for (const int depth : depth_list) {
    const std::uint64_t depth_seed = Rng::for_sample(seed, 1000003ULL * depth).next_u64();
    parallel_for(samples, threads, [&](std::size_t k) {
      Rng rng = Rng::for_sample(depth_seed, k);
      const QaoaParams params = random_params(depth, rng);
      EvolveWorkspace ws;
      const CMatrix rho_true = evolve(inst, params, depth, inst.channel, ws);
      const CMatrix rho_haar = evolve(inst, params, depth, twirled, ws);
      infid[k] = 1.0 - state_fidelity(inst.n_qubits, rho_true, rho_haar);
    });
    curve.depths.push_back(depth);
    curve.mean_infidelity.push_back(pairwise_mean(infid));
  }
  return curve;
}

}  // namespace liom
