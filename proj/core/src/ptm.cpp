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

#include "liom/ptm.hpp"

#include <stdexcept>

#include "liom/tolerances.hpp"

namespace liom {

namespace {

void require_square(const CMatrix& m, int n_qubits, const char* who) {
  const auto d = static_cast<Eigen::Index>(dim(n_qubits));
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument(std::string(who) + ": operator is not 2^n x 2^n");
}

// Fills one PTM column: the vectorization of image, checking that imaginary
// parts stay within budget.
void fill_column(RMatrix& out, Eigen::Index col, const CMatrix& image, int n_qubits,
                 const char* who) {
  const VectorizedOperator v = vectorize(image, n_qubits);
  for (Eigen::Index row = 0; row < v.coefficients.size(); ++row) {
    const Complex c = v.coefficients(row);
    if (std::abs(c.imag()) > tol::kPtmImag)
      throw std::runtime_error(std::string(who) + ": map is not Hermiticity preserving");
    out(row, col) = c.real();
  }
}

}  // namespace

bool Ptm::has_cptp_first_row(double tolerance) const {
  if (std::abs(matrix(0, 0) - 1.0) > tolerance) return false;
  for (Eigen::Index col = 1; col < matrix.cols(); ++col)
    if (std::abs(matrix(0, col)) > tolerance) return false;
  return true;
}

bool Ptm::has_unital_first_column(double tolerance) const {
  if (std::abs(matrix(0, 0) - 1.0) > tolerance) return false;
  for (Eigen::Index row = 1; row < matrix.rows(); ++row)
    if (std::abs(matrix(row, 0)) > tolerance) return false;
  return true;
}

Ptm ptm_from_kraus(const std::vector<CMatrix>& kraus, int n_qubits) {
  if (n_qubits > tol::kMaxPtmQubits)
    throw std::invalid_argument("ptm_from_kraus: qubit count beyond the PTM cap");
  if (kraus.empty()) throw std::invalid_argument("ptm_from_kraus: empty Kraus list");
  const auto d = static_cast<Eigen::Index>(dim(n_qubits));
  CMatrix completeness = CMatrix::Zero(d, d);
  for (const CMatrix& a : kraus) {
    require_square(a, n_qubits, "ptm_from_kraus");
    completeness += a.adjoint() * a;
  }
  if ((completeness - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() >
      tol::kKrausCompleteness)
    throw std::invalid_argument("ptm_from_kraus: Kraus set is not trace preserving");

  const std::uint64_t words = PauliIndex::count(n_qubits);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  Ptm ptm{n_qubits, RMatrix(static_cast<Eigen::Index>(words), static_cast<Eigen::Index>(words))};
  for (std::uint64_t code = 0; code < words; ++code) {
    const CMatrix p = norm * pauli_op(PauliIndex::from_code(n_qubits, code));
    CMatrix image = CMatrix::Zero(d, d);
    for (const CMatrix& a : kraus) image += a * p * a.adjoint();
    fill_column(ptm.matrix, static_cast<Eigen::Index>(code), image, n_qubits,
                "ptm_from_kraus");
  }
  return ptm;
}

Ptm unitary_ptm(const CMatrix& u, int n_qubits) {
  require_square(u, n_qubits, "unitary_ptm");
  const auto d = static_cast<Eigen::Index>(dim(n_qubits));
  if ((u.adjoint() * u - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol::kUnitary)
    throw std::invalid_argument("unitary_ptm: matrix is not unitary");
  return ptm_from_kraus({u}, n_qubits);
}

RMatrix commutator_ptm_imag(const CMatrix& v, int n_qubits) {
  require_square(v, n_qubits, "commutator_ptm_imag");
  if ((v - v.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian)
    throw std::invalid_argument("commutator_ptm_imag: generator is not Hermitian");
  const auto d = static_cast<Eigen::Index>(dim(n_qubits));
  const std::uint64_t words = PauliIndex::count(n_qubits);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  RMatrix k(static_cast<Eigen::Index>(words), static_cast<Eigen::Index>(words));
  for (std::uint64_t code = 0; code < words; ++code) {
    const CMatrix p = norm * pauli_op(PauliIndex::from_code(n_qubits, code));
    const CMatrix image = v * p - p * v;
    const VectorizedOperator chi = vectorize(image, n_qubits);
    for (Eigen::Index row = 0; row < chi.coefficients.size(); ++row) {
      const Complex c = chi.coefficients(row);
      if (std::abs(c.real()) > tol::kPtmImag)
        throw std::runtime_error("commutator_ptm_imag: unexpected real part");
      k(row, static_cast<Eigen::Index>(code)) = c.imag();
    }
  }
  return k;
}

CMatrix apply_ptm(const Ptm& ptm, const CMatrix& a) {
  VectorizedOperator v = vectorize(a, ptm.n_qubits);
  v.coefficients = ptm.matrix * v.coefficients;
  return unvectorize(v);
}

}  // namespace liom
