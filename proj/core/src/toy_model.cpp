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

#include "liom/toy_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "liom/functionals.hpp"
#include "liom/parallel.hpp"
#include "liom/tolerances.hpp"

namespace liom {

namespace {

double hs_overlap(const DensityMatrix& a, const DensityMatrix& b) {
  // Tr(a b) for Hermitian a, b.
  return a.matrix().conjugate().cwiseProduct(b.matrix()).sum().real();
}

// Real Pauli-basis coefficient vector of a Hermitian operator.
RVector real_vectorize(const CMatrix& a, int n_qubits, const char* who) {
  const VectorizedOperator v = vectorize(a, n_qubits);
  RVector out(v.coefficients.size());
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (std::abs(v.coefficients(i).imag()) > 1e-9)
      throw std::invalid_argument(std::string(who) + ": operator is not Hermitian");
    out(i) = v.coefficients(i).real();
  }
  return out;
}

void require_traceless_hermitian(const CMatrix& o, const char* who) {
  if ((o - o.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian)
    throw std::invalid_argument(std::string(who) + ": observable is not Hermitian");
  if (std::abs(o.trace()) > tol::kTraceless)
    throw std::invalid_argument(std::string(who) + ": observable is not traceless");
}

}  // namespace

InstanceResult simulate_instance(int n_qubits, int layers, const Channel& channel,
                                 const DensityMatrix& initial, Rng& rng) {
  if (channel.n_qubits() != n_qubits || initial.n_qubits() != n_qubits)
    throw std::invalid_argument("simulate_instance: dimension mismatch");
  InstanceResult result;
  result.purities.reserve(layers + 1);
  CMatrix rho = initial.matrix();
  CMatrix tmp(rho.rows(), rho.cols());
  CMatrix scratch, accum;
  result.purities.push_back(rho.squaredNorm());
  for (int l = 0; l < layers; ++l) {
    const CMatrix u = haar_unitary(n_qubits, rng);
    tmp.noalias() = u * rho;
    rho.noalias() = tmp * u.adjoint();
    channel.apply_in_place(rho, scratch, accum);
    result.purities.push_back(rho.squaredNorm());
  }
  result.final_state = DensityMatrix::from_matrix_unchecked(n_qubits, std::move(rho));
  return result;
}

PurityTrace simulate(const ToyModelConfig& cfg, int threads) {
  if (cfg.samples < 1) throw std::invalid_argument("simulate: samples must be >= 1");
  if (cfg.layers < 0) throw std::invalid_argument("simulate: negative layer count");
  PurityTrace trace;
  trace.layers = cfg.layers;
  trace.rows.resize(cfg.samples);
  parallel_for(cfg.samples, threads, [&](std::size_t k) {
    Rng rng = Rng::for_sample(cfg.seed, k);
    trace.rows[k] =
        simulate_instance(cfg.n_qubits, cfg.layers, cfg.channel, cfg.initial_state, rng)
            .purities;
  });
  return trace;
}

double exact_avg_overlap(const Channel& ch, const DensityMatrix& rho_i,
                         const DensityMatrix& rho_j, int layers) {
  if (layers < 0) throw std::invalid_argument("exact_avg_overlap: negative layer count");
  const int n = ch.n_qubits();
  const double dn = static_cast<double>(dim(n));
  const double sn = dn * dn;
  const NoiseCoefficients& c = ch.coefficients();
  const double overlap0 = hs_overlap(rho_i, rho_j);
  const double pump = dn * (dn * c.eta - c.nu) / (sn - 1.0);
  if (std::abs(1.0 - c.r) < 1e-12) return overlap0 + layers * pump;
  const double rl = std::pow(c.r, layers);
  return rl * overlap0 + (1.0 - rl) / (1.0 - c.r) * pump;
}

double approx_avg_purity(const Channel& ch, const DensityMatrix& rho_in, int layers) {
  if (layers < 0) throw std::invalid_argument("approx_avg_purity: negative layer count");
  return std::pow(1.0 - 2.0 * ch.coefficients().p_eff, layers) * rho_in.purity();
}

HoeffdingBand hoeffding_band(const Channel& ch, const DensityMatrix& rho_in, int layers,
                             double p_max) {
  if (!(p_max > 0.0 && p_max < 2.0))
    throw std::invalid_argument("hoeffding_band: p_max outside (0, 2)");
  const auto [lambda_min, lambda_max] = ch.gram_eigen_range();
  if (lambda_min <= 0.0)
    throw std::domain_error("hoeffding_band: N^T N is singular, band undefined");
  const double log_range = std::log(lambda_max) - std::log(lambda_min);
  const double scale = std::sqrt(0.5 * std::log(2.0 / p_max));
  HoeffdingBand band;
  band.lower.resize(layers + 1);
  band.upper.resize(layers + 1);
  for (int l = 0; l <= layers; ++l) {
    const double mean = approx_avg_purity(ch, rho_in, l);
    const double width = scale * log_range * std::sqrt(static_cast<double>(l));
    band.lower[l] = mean * std::exp(-width);
    band.upper[l] = mean * std::exp(width);
  }
  return band;
}

std::vector<double> beta_sequence(const Channel& ch, double initial_purity, int count) {
  const double dn = static_cast<double>(dim(ch.n_qubits()));
  const double sn = dn * dn;
  const NoiseCoefficients& c = ch.coefficients();
  std::vector<double> beta;
  beta.reserve(count);
  if (count <= 0) return beta;
  beta.push_back((initial_purity - 1.0 / dn) / (sn - 1.0));
  const double drive = (c.eta - 1.0 / dn) / (sn - 1.0);
  for (int j = 2; j <= count; ++j) beta.push_back(drive + c.r * beta.back());
  return beta;
}

VarianceCoefficients estimate_g_coefficients(const Channel& ch, const CMatrix& generator,
                                             int ell, const DensityMatrix& rho_in,
                                             int samples, Rng& rng,
                                             const SublayerSampler& sampler) {
  if (ell < 1) throw std::invalid_argument("estimate_g_coefficients: ell must be >= 1");
  if (samples < 1) throw std::invalid_argument("estimate_g_coefficients: samples must be >= 1");
  const int n = ch.n_qubits();
  require_traceless_hermitian(generator, "estimate_g_coefficients");

  const RMatrix noise = ch.materialized_ptm();
  const RMatrix k_comm = commutator_ptm_imag(generator, n);
  const RVector noise_col0 = noise.col(0);
  const RVector chi_rho = real_vectorize(rho_in.matrix(), n, "estimate_g_coefficients");
  const double dn = static_cast<double>(dim(n));

  const SublayerSampler haar_companion = [](int nq, Rng& r) {
    return unitary_ptm(haar_unitary(nq, r), nq).matrix;
  };
  const SublayerSampler& draw = sampler ? sampler : haar_companion;

  VarianceCoefficients out;
  out.alpha.assign(std::max(0, ell - 1), 1.0 / dn);
  out.beta = beta_sequence(ch, rho_in.purity(), ell - 1);

  std::vector<double> eta_samples(samples), nu_samples(samples), g_samples(samples);
  const double beta_prev = ell >= 2 ? out.beta[ell - 2] : 0.0;
  RMatrix sandwiched(noise.rows(), noise.cols());
  for (int s = 0; s < samples; ++s) {
    const RMatrix u = draw(n, rng);
    sandwiched.noalias() = u.transpose() * k_comm * u;
    const double nu_s = (noise.transpose() * sandwiched).squaredNorm();
    const double eta_s = (sandwiched * noise_col0).squaredNorm();
    eta_samples[s] = eta_s;
    nu_samples[s] = nu_s;
    if (ell == 1) {
      g_samples[s] = (sandwiched * chi_rho).squaredNorm();
    } else {
      g_samples[s] = eta_s / dn + (nu_s - eta_s) * beta_prev;
    }
  }
  const auto mean_se = [samples](const std::vector<double>& xs) {
    const double mean = pairwise_mean(xs);
    const double var = pairwise_variance(xs);
    return std::pair<double, double>{mean, std::sqrt(var / samples)};
  };
  std::tie(out.eta_minus_avg, out.eta_minus_se) = mean_se(eta_samples);
  std::tie(out.nu_minus_avg, out.nu_minus_se) = mean_se(nu_samples);
  std::tie(out.g, out.g_se) = mean_se(g_samples);
  return out;
}

double variance_predictor(const Channel& ch, const CMatrix& observable, int layers, int ell,
                          double g) {
  if (ell < 1 || ell > layers)
    throw std::invalid_argument("variance_predictor: need 1 <= ell <= layers");
  const int n = ch.n_qubits();
  require_traceless_hermitian(observable, "variance_predictor");
  const double sn = static_cast<double>(sdim(n));
  const RVector chi = real_vectorize(observable, n, "variance_predictor");
  const RMatrix noise = ch.materialized_ptm();
  RVector adjoint_image = noise.transpose() * chi;
  // Only the traceless block of the adjoint-applied observable survives the
  // layer averages; for non-unital noise the identity component is nonzero
  // and must be projected out.
  adjoint_image(0) = 0.0;
  return g * std::pow(ch.coefficients().r, layers - ell) / (sn - 1.0) *
         adjoint_image.squaredNorm();
}

VarianceCheckResult variance_mc_check(int n_qubits, const Channel& ch,
                                      const CMatrix& generator, const CMatrix& observable,
                                      int layers, int ell, int samples, std::uint64_t seed,
                                      int threads, double fd_step, int predictor_samples) {
  if (n_qubits > 3)
    throw std::invalid_argument("variance_mc_check: harness is meant for small systems");
  if (ell < 1 || ell > layers)
    throw std::invalid_argument("variance_mc_check: need 1 <= ell <= layers");
  require_traceless_hermitian(generator, "variance_mc_check");
  require_traceless_hermitian(observable, "variance_mc_check");

  const auto d = static_cast<Eigen::Index>(dim(n_qubits));
  Eigen::SelfAdjointEigenSolver<CMatrix> gen_eig(generator);
  const CMatrix gen_vectors = gen_eig.eigenvectors();
  const RVector gen_values = gen_eig.eigenvalues();
  const auto rotation = [&](double theta) {
    CVector phases(d);
    for (Eigen::Index i = 0; i < d; ++i)
      phases(i) = std::exp(Complex{0.0, -theta * gen_values(i)});
    return CMatrix(gen_vectors * phases.asDiagonal() * gen_vectors.adjoint());
  };

  const DensityMatrix initial = DensityMatrix::plus_state(n_qubits);
  std::vector<double> derivative(samples);
  parallel_for(samples, threads, [&](std::size_t k) {
    Rng rng = Rng::for_sample(seed, k);
    // Layer l is W2_l exp(-i theta_l V) W1_l with independent Haar
    // companions on both sides, drawn in the order W1, theta, W2. The layer
    // ensemble is exactly Haar, and the companion above the rotation keeps
    // the full layer independent of the conjugated generator, which the
    // closed-form predictor requires.
    std::vector<CMatrix> lower(layers), upper(layers);
    std::vector<double> thetas(layers);
    for (int l = 0; l < layers; ++l) {
      lower[l] = haar_unitary(n_qubits, rng);
      thetas[l] = rng.uniform(0.0, 2.0 * std::numbers::pi);
      upper[l] = haar_unitary(n_qubits, rng);
    }
    const auto evaluate = [&](double shift) {
      CMatrix rho = initial.matrix();
      CMatrix tmp(d, d), scratch, accum;
      for (int l = 0; l < layers; ++l) {
        tmp.noalias() = lower[l] * rho;
        rho.noalias() = tmp * lower[l].adjoint();
        const double theta = thetas[l] + (l == ell - 1 ? shift : 0.0);
        const CMatrix rot = rotation(theta);
        tmp.noalias() = rot * rho;
        rho.noalias() = tmp * rot.adjoint();
        tmp.noalias() = upper[l] * rho;
        rho.noalias() = tmp * upper[l].adjoint();
        ch.apply_in_place(rho, scratch, accum);
      }
      return observable.conjugate().cwiseProduct(rho).sum().real();
    };
    derivative[k] = (evaluate(fd_step) - evaluate(-fd_step)) / (2.0 * fd_step);
  });

  VarianceCheckResult result;
  result.mc_variance = pairwise_variance(derivative);
  // Standard error of the sample variance from the fourth central moment.
  const double mean = pairwise_mean(derivative);
  std::vector<double> fourth(samples);
  for (int i = 0; i < samples; ++i) {
    const double dev = derivative[i] - mean;
    fourth[i] = dev * dev * dev * dev;
  }
  const double m4 = pairwise_mean(fourth);
  const double m2 = result.mc_variance * (samples - 1.0) / samples;
  result.mc_se = std::sqrt(std::max(0.0, m4 - m2 * m2) / samples);

  Rng pred_rng = Rng::for_sample(seed ^ 0x9e3779b97f4a7c15ULL, 0);
  const VarianceCoefficients coeffs =
      estimate_g_coefficients(ch, generator, ell, initial, predictor_samples, pred_rng);
  result.predicted = variance_predictor(ch, observable, layers, ell, coeffs.g);
  result.predicted_se = coeffs.g_se > 0.0 && coeffs.g > 0.0
                            ? result.predicted * (coeffs.g_se / coeffs.g)
                            : 0.0;
  return result;
}

}  // namespace liom
