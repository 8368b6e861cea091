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

#include "liom/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/SVD>

#include "liom/tolerances.hpp"

namespace liom {

namespace {

void require_same_dims(const DensityMatrix& rho, const DensityMatrix& sigma,
                       const char* who) {
  if (rho.n_qubits() != sigma.n_qubits())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

// Eigenvalues of a state, clipped to [0, 1] within the PSD tolerance.
RVector state_eigenvalues(const CMatrix& m, const char* who) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  RVector ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol::kPsdEigen || ev(i) > 1.0 + tol::kPsdEigen)
      throw std::runtime_error(std::string(who) + ": eigenvalue outside [0,1] beyond tolerance");
    ev(i) = std::min(1.0, std::max(0.0, ev(i)));
  }
  return ev;
}

}  // namespace

double purity(const DensityMatrix& rho) { return rho.purity(); }

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dims(rho, sigma, "trace_distance");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix() - sigma.matrix(),
                                            Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dims(rho, sigma, "fidelity");
  // F = || sqrt(rho) sqrt(sigma) ||_1, the nuclear norm of the root product.
  Eigen::SelfAdjointEigenSolver<CMatrix> er(rho.matrix());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sigma.matrix());
  RVector lr = er.eigenvalues();
  RVector ls = es.eigenvalues();
  for (Eigen::Index i = 0; i < lr.size(); ++i) {
    if (lr(i) < -tol::kPsdEigen || ls(i) < -tol::kPsdEigen)
      throw std::runtime_error("fidelity: state has negative eigenvalue beyond tolerance");
    lr(i) = std::sqrt(std::min(1.0, std::max(0.0, lr(i))));
    ls(i) = std::sqrt(std::min(1.0, std::max(0.0, ls(i))));
  }
  const CMatrix root_product = er.eigenvectors() * lr.asDiagonal() *
                               er.eigenvectors().adjoint() * es.eigenvectors() *
                               ls.asDiagonal() * es.eigenvectors().adjoint();
  Eigen::JacobiSVD<CMatrix> svd(root_product);
  const double f = svd.singularValues().sum();
  return std::min(1.0, f);
}

double schatten_norm(const CMatrix& a, double p) {
  if (!(p >= 1.0))
    throw std::invalid_argument("schatten_norm: p must be >= 1");
  Eigen::JacobiSVD<CMatrix> svd(a);
  const RVector& s = svd.singularValues();
  if (std::isinf(p)) return s.size() > 0 ? s.maxCoeff() : 0.0;
  if (p == 1.0) return s.sum();
  if (p == 2.0) return s.norm();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
  return std::pow(acc, 1.0 / p);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dims(rho, sigma, "relative_entropy");
  Eigen::SelfAdjointEigenSolver<CMatrix> er(rho.matrix());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sigma.matrix());
  const RVector lr = state_eigenvalues(rho.matrix(), "relative_entropy");
  const RVector ls = state_eigenvalues(sigma.matrix(), "relative_entropy");

  // D = Tr[rho log2 rho] - Tr[rho log2 sigma].
  double d = 0.0;
  for (Eigen::Index i = 0; i < lr.size(); ++i)
    if (lr(i) > 0.0) d += lr(i) * std::log2(lr(i));

  constexpr double kSupportEps = 1e-12;
  for (Eigen::Index k = 0; k < ls.size(); ++k) {
    const CVector v = es.eigenvectors().col(k);
    const double weight = std::real((v.adjoint() * rho.matrix() * v)(0, 0));
    if (ls(k) <= kSupportEps) {
      if (weight > kSupportEps) return std::numeric_limits<double>::infinity();
      continue;
    }
    d -= weight * std::log2(ls(k));
  }
  return d;
}

}  // namespace liom
