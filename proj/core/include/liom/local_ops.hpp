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

#include <vector>

#include "liom/types.hpp"

namespace liom::local {

// In-place kernels on 2^n x 2^n matrices. Qubit q occupies bit (n-1-q) of a
// basis index, i.e. qubit 0 is the leftmost tensor factor.

/// rho <- (G on qubit q) * rho
void apply_left(CMatrix& rho, int n_qubits, int qubit, const Matrix2c& g);

/// rho <- rho * (G on qubit q)^dagger
void apply_right_adjoint(CMatrix& rho, int n_qubits, int qubit, const Matrix2c& g);

/// rho <- G rho G^dagger with G acting on one qubit.
void conjugate(CMatrix& rho, int n_qubits, int qubit, const Matrix2c& g);

/// rho <- sum_k K_k rho K_k^dagger with single-qubit Kraus operators K_k.
/// `scratch` and `accum` must match rho's shape and are clobbered.
void apply_kraus(CMatrix& rho, int n_qubits, int qubit,
                 const std::vector<Matrix2c>& kraus, CMatrix& scratch, CMatrix& accum);

/// rho <- diag(p) rho diag(p)^dagger with |p_a| = 1.
void apply_diagonal_phase(CMatrix& rho, const CVector& phases);

}  // namespace liom::local
