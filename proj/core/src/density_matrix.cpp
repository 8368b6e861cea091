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

#include "liom/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "liom/tolerances.hpp"

namespace liom {

DensityMatrix DensityMatrix::pure(const CVector& psi) {
  const auto d = psi.size();
  if (d <= 0 || (d & (d - 1)) != 0)
    throw std::invalid_argument("DensityMatrix::pure: state dimension is not a power of two");
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  if (std::abs(psi.norm() - 1.0) > tol::kTrace)
    throw std::invalid_argument("DensityMatrix::pure: state vector is not normalized");
  DensityMatrix rho;
  rho.n_ = n;
  rho.m_ = psi * psi.adjoint();
  return rho;
}

DensityMatrix DensityMatrix::basis_state(int n_qubits, std::size_t index) {
  const auto d = dim(n_qubits);
  if (index >= d) throw std::invalid_argument("DensityMatrix::basis_state: index out of range");
  CVector psi = CVector::Zero(static_cast<Eigen::Index>(d));
  psi(static_cast<Eigen::Index>(index)) = 1.0;
  return pure(psi);
}

DensityMatrix DensityMatrix::plus_state(int n_qubits) {
  const auto d = dim(n_qubits);
  CVector psi = CVector::Constant(static_cast<Eigen::Index>(d),
                                  Complex{1.0 / std::sqrt(static_cast<double>(d)), 0.0});
  return pure(psi);
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const auto d = static_cast<Eigen::Index>(dim(n_qubits));
  DensityMatrix rho;
  rho.n_ = n_qubits;
  rho.m_ = CMatrix::Identity(d, d) / static_cast<double>(d);
  return rho;
}

DensityMatrix DensityMatrix::from_matrix(int n_qubits, CMatrix m) {
  DensityMatrix rho = from_matrix_unchecked(n_qubits, std::move(m));
  rho.validate();
  return rho;
}

DensityMatrix DensityMatrix::from_matrix_unchecked(int n_qubits, CMatrix m) {
  const auto d = static_cast<Eigen::Index>(dim(n_qubits));
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("DensityMatrix: matrix is not 2^n x 2^n");
  DensityMatrix rho;
  rho.n_ = n_qubits;
  rho.m_ = std::move(m);
  return rho;
}

double DensityMatrix::purity() const { return m_.squaredNorm(); }

void DensityMatrix::validate() const {
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian)
    throw std::runtime_error("DensityMatrix: not Hermitian");
  if (std::abs(m_.trace().real() - 1.0) > tol::kTrace ||
      std::abs(m_.trace().imag()) > tol::kTrace)
    throw std::runtime_error("DensityMatrix: trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::kPsdEigen)
    throw std::runtime_error("DensityMatrix: negative eigenvalue beyond tolerance");
}

}  // namespace liom
