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

#include "liom/pauli.hpp"
#include "liom/types.hpp"

namespace liom {

/// Matrix of a superoperator in the normalized Pauli basis. Real for
/// Hermiticity-preserving maps. Row/column order follows PauliIndex codes.
///
/// For a trace-preserving map the first row is (1, 0, ..., 0); a unitary map
/// additionally has first column (1, 0, ..., 0)^T and an orthogonal lower
/// right block.
struct Ptm {
  int n_qubits = 0;
  RMatrix matrix;

  bool has_cptp_first_row(double tolerance) const;
  bool has_unital_first_column(double tolerance) const;
};

/// PTM of the map rho -> sum_j A_j rho A_j^dagger. Throws if the Kraus set
/// is not trace preserving or if an entry has an imaginary part beyond the
/// Hermiticity-preservation budget.
Ptm ptm_from_kraus(const std::vector<CMatrix>& kraus, int n_qubits);

/// PTM of conjugation by a unitary, rho -> U rho U^dagger.
Ptm unitary_ptm(const CMatrix& u, int n_qubits);

/// The commutator map A -> [V, A] has a purely imaginary PTM i*K with K real
/// antisymmetric; returns K. V must be Hermitian.
RMatrix commutator_ptm_imag(const CMatrix& v, int n_qubits);

/// Applies the superoperator with the given PTM to an operator.
CMatrix apply_ptm(const Ptm& ptm, const CMatrix& a);

}  // namespace liom
