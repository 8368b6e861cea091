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

#include "liom/local_ops.hpp"

#include <cstdint>
#include <stdexcept>

namespace liom::local {

namespace {

inline std::uint64_t qubit_mask(int n_qubits, int qubit) {
  if (qubit < 0 || qubit >= n_qubits)
    throw std::invalid_argument("local op: qubit index out of range");
  return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

}  // namespace

void apply_left(CMatrix& rho, int n_qubits, int qubit, const Matrix2c& g) {
  const std::uint64_t m = qubit_mask(n_qubits, qubit);
  const auto d = static_cast<std::uint64_t>(rho.rows());
  const Complex g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
  for (std::uint64_t col = 0; col < d; ++col) {
    Complex* data = rho.data() + col * d;
    for (std::uint64_t a = 0; a < d; ++a) {
      if (a & m) continue;
      const std::uint64_t b = a | m;
      const Complex r0 = data[a];
      const Complex r1 = data[b];
      data[a] = g00 * r0 + g01 * r1;
      data[b] = g10 * r0 + g11 * r1;
    }
  }
}

void apply_right_adjoint(CMatrix& rho, int n_qubits, int qubit, const Matrix2c& g) {
  const std::uint64_t m = qubit_mask(n_qubits, qubit);
  const auto d = static_cast<std::uint64_t>(rho.rows());
  const Complex c00 = std::conj(g(0, 0)), c01 = std::conj(g(0, 1));
  const Complex c10 = std::conj(g(1, 0)), c11 = std::conj(g(1, 1));
  for (std::uint64_t c = 0; c < d; ++c) {
    if (c & m) continue;
    const std::uint64_t c1 = c | m;
    Complex* col0 = rho.data() + c * d;
    Complex* col1 = rho.data() + c1 * d;
    for (std::uint64_t row = 0; row < d; ++row) {
      const Complex v0 = col0[row];
      const Complex v1 = col1[row];
      col0[row] = v0 * c00 + v1 * c01;
      col1[row] = v0 * c10 + v1 * c11;
    }
  }
}

void conjugate(CMatrix& rho, int n_qubits, int qubit, const Matrix2c& g) {
  apply_left(rho, n_qubits, qubit, g);
  apply_right_adjoint(rho, n_qubits, qubit, g);
}

void apply_kraus(CMatrix& rho, int n_qubits, int qubit,
                 const std::vector<Matrix2c>& kraus, CMatrix& scratch, CMatrix& accum) {
  if (kraus.empty()) throw std::invalid_argument("apply_kraus: empty Kraus list");
  accum.setZero();
  for (const Matrix2c& k : kraus) {
    scratch = rho;
    conjugate(scratch, n_qubits, qubit, k);
    accum += scratch;
  }
  rho.swap(accum);
}

void apply_diagonal_phase(CMatrix& rho, const CVector& phases) {
  const auto d = rho.rows();
  if (phases.size() != d)
    throw std::invalid_argument("apply_diagonal_phase: phase vector size mismatch");
  for (Eigen::Index col = 0; col < d; ++col) {
    const Complex pc = std::conj(phases(col));
    rho.col(col) = (rho.col(col).array() * phases.array()).matrix() * pc;
  }
}

}  // namespace liom::local
