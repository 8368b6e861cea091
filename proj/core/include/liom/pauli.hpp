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

/// Binary symplectic label of an n-qubit Pauli operator
///   P_r = i^{x.z} X(x) Z(z),
/// with X(x) = X^{x_0} x ... x X^{x_{n-1}} and likewise for Z(z).
///
/// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of
/// a computational-basis index. The scalar code enumerates Pauli words in
/// per-qubit symbol order I < X < Y < Z, qubit 0 being the most significant
/// base-4 digit, so code 0 is the identity and for one qubit the order is
/// (I, X, Y, Z).
class PauliIndex {
 public:
  PauliIndex(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  /// Decode from the (I,X,Y,Z) base-4 code.
  static PauliIndex from_code(int n_qubits, std::uint64_t code);

  /// Number of Pauli words on n qubits: 4^n.
  static std::uint64_t count(int n_qubits) { return std::uint64_t{1} << (2 * n_qubits); }

  int n_qubits() const { return n_; }
  /// Bit for qubit q sits at position (n-1-q), matching basis-state indices.
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  std::uint64_t code() const;

  bool is_identity() const { return x_ == 0 && z_ == 0; }

 private:
  int n_;
  std::uint64_t x_;
  std::uint64_t z_;
};

/// Dense 2^n x 2^n matrix of the Hermitian unitary P_r.
CMatrix pauli_op(const PauliIndex& r);

/// Tr(P_r A) without forming P_r; A must be 2^n x 2^n.
Complex pauli_trace(const PauliIndex& r, const CMatrix& a);

/// Coefficients chi_A(r) = Tr(P_r A) / 2^{n/2} of A in the normalized Pauli
/// basis, ordered by PauliIndex code.
struct VectorizedOperator {
  int n_qubits;
  CVector coefficients;
};

VectorizedOperator vectorize(const CMatrix& a, int n_qubits);
CMatrix unvectorize(const VectorizedOperator& v);

}  // namespace liom
