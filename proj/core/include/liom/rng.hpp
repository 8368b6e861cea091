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

#include "liom/types.hpp"

namespace liom {

/// Deterministic, splittable random stream (xoshiro256++ seeded via
/// splitmix64). The stream drawn for Monte-Carlo sample k is a pure
/// function of (seed, k), so results do not depend on scheduling or on
/// the number of worker threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Stream for sample `k` of a run keyed by `seed`.
  static Rng for_sample(std::uint64_t seed, std::uint64_t k);

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal (Box-Muller, pair-cached).
  double normal();
  /// Complex with independent N(0,1) real and imaginary parts.
  Complex complex_normal();

 private:
  std::uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// Haar-distributed random unitary on n qubits: QR of a complex Ginibre
/// matrix with the R-diagonal phases folded back into Q.
CMatrix haar_unitary(int n_qubits, Rng& rng);

/// Haar-distributed pure state on n qubits.
CVector random_pure_state(int n_qubits, Rng& rng);

/// Random full-rank mixed state (normalized Ginibre Wishart with `rank`
/// columns; rank 0 means full rank 2^n).
CMatrix random_mixed_state(int n_qubits, Rng& rng, int rank = 0);

/// Random Hermitian matrix with N(0,1) Gaussian entries.
CMatrix random_hermitian(int dimension, Rng& rng);

}  // namespace liom
