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

#include <cstddef>

#include "liom/types.hpp"

namespace liom {

/// 2^n x 2^n Hermitian, positive semidefinite, trace-one matrix.
///
/// Construction through `from_matrix` validates the invariants; the
/// unchecked variant and the mutable accessor exist for hot loops that
/// apply many guaranteed-CPTP operations in place.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  static DensityMatrix pure(const CVector& psi);
  static DensityMatrix basis_state(int n_qubits, std::size_t index);
  static DensityMatrix plus_state(int n_qubits);
  static DensityMatrix maximally_mixed(int n_qubits);
  static DensityMatrix from_matrix(int n_qubits, CMatrix m);
  static DensityMatrix from_matrix_unchecked(int n_qubits, CMatrix m);

  int n_qubits() const { return n_; }
  const CMatrix& matrix() const { return m_; }
  CMatrix& matrix() { return m_; }

  double purity() const;

  /// Throws std::runtime_error naming the violated invariant
  /// (hermiticity, trace, or positivity).
  void validate() const;

 private:
  int n_ = 0;
  CMatrix m_;
};

}  // namespace liom
