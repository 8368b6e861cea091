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

#include "liom/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "liom/tolerances.hpp"

namespace liom {

namespace {

// i^k for k in 0..3.
inline Complex ipow(unsigned k) {
  switch (k & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }

// Per-qubit symbol in I < X < Y < Z order from the (x, z) bit pair.
inline std::uint64_t digit_of(bool x, bool z) {
  if (!x && !z) return 0;  // I
  if (x && !z) return 1;   // X
  if (x && z) return 2;    // Y
  return 3;                // Z
}

}  // namespace

PauliIndex::PauliIndex(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_(n_qubits), x_(x_mask), z_(z_mask) {
  if (n_qubits <= 0 || n_qubits > tol::kMaxStateQubits)
    throw std::invalid_argument("PauliIndex: qubit count out of range");
  const std::uint64_t all = (std::uint64_t{1} << n_qubits) - 1;
  if ((x_ & ~all) != 0 || (z_ & ~all) != 0)
    throw std::invalid_argument("PauliIndex: mask exceeds qubit count");
}

PauliIndex PauliIndex::from_code(int n_qubits, std::uint64_t code) {
  if (code >= count(n_qubits)) throw std::invalid_argument("PauliIndex: code out of range");
  std::uint64_t x = 0, z = 0;
  for (int q = 0; q < n_qubits; ++q) {
    const std::uint64_t digit = (code >> (2 * (n_qubits - 1 - q))) & 3u;
    const std::uint64_t bit = std::uint64_t{1} << (n_qubits - 1 - q);
    switch (digit) {
      case 1: x |= bit; break;           // X
      case 2: x |= bit; z |= bit; break; // Y
      case 3: z |= bit; break;           // Z
      default: break;                    // I
    }
  }
  return PauliIndex(n_qubits, x, z);
}

std::uint64_t PauliIndex::code() const {
  std::uint64_t code = 0;
  for (int q = 0; q < n_; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n_ - 1 - q);
    code |= digit_of(x_ & bit, z_ & bit) << (2 * (n_ - 1 - q));
  }
  return code;
}

CMatrix pauli_op(const PauliIndex& r) {
  const auto d = static_cast<Eigen::Index>(dim(r.n_qubits()));
  const Complex phase = ipow(static_cast<unsigned>(std::popcount(r.x_mask() & r.z_mask())));
  CMatrix p = CMatrix::Zero(d, d);
  for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(d); ++a) {
    const std::uint64_t b = a ^ r.x_mask();
    const double sign = parity(r.z_mask() & b) ? -1.0 : 1.0;
    p(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = phase * sign;
  }
  return p;
}

Complex pauli_trace(const PauliIndex& r, const CMatrix& a) {
  const auto d = dim(r.n_qubits());
  if (a.rows() != static_cast<Eigen::Index>(d) || a.cols() != static_cast<Eigen::Index>(d))
    throw std::invalid_argument("pauli_trace: dimension mismatch");
  const Complex phase = ipow(static_cast<unsigned>(std::popcount(r.x_mask() & r.z_mask())));
  Complex sum{0.0, 0.0};
  for (std::uint64_t row = 0; row < d; ++row) {
    const std::uint64_t col = row ^ r.x_mask();
    const double sign = parity(r.z_mask() & col) ? -1.0 : 1.0;
    const Complex entry = a(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(row));
    sum += sign * entry;
  }
  return phase * sum;
}

VectorizedOperator vectorize(const CMatrix& a, int n_qubits) {
  const auto d = dim(n_qubits);
  if (a.rows() != static_cast<Eigen::Index>(d) || a.cols() != static_cast<Eigen::Index>(d))
    throw std::invalid_argument("vectorize: matrix is not 2^n x 2^n");
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  const std::uint64_t words = PauliIndex::count(n_qubits);
  CVector chi(static_cast<Eigen::Index>(words));
  for (std::uint64_t code = 0; code < words; ++code) {
    const auto r = PauliIndex::from_code(n_qubits, code);
    chi(static_cast<Eigen::Index>(code)) = norm * pauli_trace(r, a);
  }
  return {n_qubits, std::move(chi)};
}

CMatrix unvectorize(const VectorizedOperator& v) {
  const int n = v.n_qubits;
  const auto d = dim(n);
  const std::uint64_t words = PauliIndex::count(n);
  if (v.coefficients.size() != static_cast<Eigen::Index>(words))
    throw std::invalid_argument("unvectorize: coefficient vector is not 4^n long");
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  CMatrix a = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::uint64_t code = 0; code < words; ++code) {
    const Complex coeff = v.coefficients(static_cast<Eigen::Index>(code));
    if (coeff == Complex{0.0, 0.0}) continue;
    const auto r = PauliIndex::from_code(n, code);
    const Complex phase =
        ipow(static_cast<unsigned>(std::popcount(r.x_mask() & r.z_mask())));
    const Complex scale = coeff * phase * norm;
    for (std::uint64_t row = 0; row < d; ++row) {
      const std::uint64_t col = row ^ r.x_mask();
      const double sign = parity(r.z_mask() & col) ? -1.0 : 1.0;
      a(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += scale * sign;
    }
  }
  return a;
}

}  // namespace liom
