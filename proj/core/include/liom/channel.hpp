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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liom/density_matrix.hpp"
#include "liom/ptm.hpp"
#include "liom/rng.hpp"
#include "liom/types.hpp"

namespace liom {

/// Scalar descriptors of a channel N with superoperator matrix N_hat:
///   nu    = Tr(N_hat N_hat^T) / 4^n
///   eta   = purity of N(I/2^n)
///   r     = (4^n nu - 2^n eta) / (4^n - 1)
///   p_eff = 1 - (Tr N_hat - 1) / (4^n - 1)
/// r is the contraction rate of the traceless block under twirled
/// iteration; p_eff is the strength of the equivalent global depolarizing
/// channel after a 2-design twirl.
struct NoiseCoefficients {
  double nu = 0.0;
  double eta = 0.0;
  double r = 0.0;
  double p_eff = 0.0;

  /// Throws when a coefficient leaves its admissible range or the linear
  /// relation r (4^n - 1) = 4^n nu - 2^n eta is violated.
  void validate(int n_qubits) const;
};

/// Set of traceless jump operators defining a purely dissipative generator.
struct LindbladSpec {
  int n_qubits;
  std::vector<CMatrix> jump_ops;

  LindbladSpec(int n, std::vector<CMatrix> jumps);
};

/// CPTP map. The representation is chosen at construction:
///  - a list of global Kraus operators (dense PTM kept alongside),
///  - a tensor product of single-qubit factors (per-qubit Kraus + 4x4 PTMs),
///  - a global depolarizing channel of strength p,
///  - a bare PTM.
/// Channels are immutable and safe to share across threads. Noise
/// coefficients are computed once at construction.
class Channel {
 public:
  enum class Rep { kKrausDense, kProduct, kDepolarizing, kPtmOnly };

  /// Empty channel; assign a real one before use.
  Channel() = default;

  static Channel identity(int n_qubits);
  static Channel from_kraus(std::vector<CMatrix> kraus, int n_qubits, std::string label);
  static Channel from_ptm(Ptm ptm, std::string label);

  int n_qubits() const { return n_; }
  const std::string& label() const { return label_; }
  Rep rep() const { return rep_; }

  bool is_product() const { return rep_ == Rep::kProduct; }
  bool is_global_depolarizing() const { return rep_ == Rep::kDepolarizing; }
  double depolarizing_strength() const;

  /// Per-qubit 4x4 PTM factors; product representation only.
  const std::vector<RMatrix>& factor_ptms() const;
  /// Per-qubit Kraus lists; product representation only.
  const std::vector<std::vector<Matrix2c>>& factor_kraus() const;

  bool has_kraus() const;
  /// Global Kraus operators; for product channels the outer product of the
  /// factors is materialized on demand.
  std::vector<CMatrix> kraus() const;

  /// Dense 4^n x 4^n PTM, materialized on demand for structured
  /// representations. Guarded by the dense-PTM qubit cap.
  RMatrix materialized_ptm() const;

  /// Tr(N_hat) without materializing the PTM.
  double ptm_trace() const;
  /// Tr(N_hat N_hat^T) without materializing the PTM.
  double ptm_frobenius_sq() const;
  /// (lambda_min, lambda_max) of the PSD matrix N_hat^T N_hat.
  std::pair<double, double> gram_eigen_range() const;

  const NoiseCoefficients& coefficients() const { return coeffs_; }

  DensityMatrix apply(const DensityMatrix& rho) const;
  /// In-place application; scratch matrices are resized as needed.
  void apply_in_place(CMatrix& rho, CMatrix& scratch, CMatrix& accum) const;

 private:
  void finalize();

  int n_ = 0;
  std::string label_;
  Rep rep_ = Rep::kPtmOnly;
  std::vector<CMatrix> kraus_;
  std::vector<std::vector<Matrix2c>> factor_kraus_;
  std::vector<RMatrix> factor_ptms_;
  double depol_p_ = 0.0;
  RMatrix dense_ptm_;
  NoiseCoefficients coeffs_;

  friend Channel amplitude_damping(double gamma_down);
  friend Channel depolarizing(double p_eff, int n_qubits);
  friend Channel tensor(const std::vector<Channel>& parts);
  friend Channel lindblad_channel(const LindbladSpec& spec, double strength);
};

/// Single-qubit amplitude damping with decay probability gamma_down.
Channel amplitude_damping(double gamma_down);

/// Global depolarizing channel rho -> (1-p) rho + p I/2^n. Accepts the
/// twirl range 0 <= p <= 1 + 1/(4^n - 1).
Channel depolarizing(double p_eff, int n_qubits);

/// Tensor product of channels; the PTM is the Kronecker product with the
/// first part as the most significant factor.
Channel tensor(const std::vector<Channel>& parts);
Channel tensor_power(const Channel& ch, int copies);

NoiseCoefficients noise_coefficients(const Channel& ch);

/// Global depolarizing channel with the strength the 2-design twirl of `ch`
/// produces.
Channel haar_twirl(const Channel& ch);

/// exp(strength * sum_k D[L_k]) with D the dissipator of jump operator L.
Channel lindblad_channel(const LindbladSpec& spec, double strength);

/// Dense PTM of the dissipator sum for `spec` (strength 1).
RMatrix lindblad_dissipator_ptm(const LindbladSpec& spec);

/// Empirical lower bound on the trace-distance contraction coefficient,
/// maximized over Haar-random pure-state pairs.
double contraction_estimate(const Channel& ch, int n_pairs, Rng& rng);

DensityMatrix apply(const Channel& ch, const DensityMatrix& rho);

}  // namespace liom
