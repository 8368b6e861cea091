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

#include "liom/channel.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "liom/functionals.hpp"
#include "liom/local_ops.hpp"
#include "liom/tolerances.hpp"

namespace liom {

namespace {

double pow_int(double base, int exponent) {
  double acc = 1.0;
  for (int i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

}  // namespace

void NoiseCoefficients::validate(int n_qubits) const {
  const double dn = static_cast<double>(dim(n_qubits));
  const double sn = dn * dn;
  if (eta < 1.0 / dn - tol::kCoeffIdentity || eta > 1.0 + tol::kCoeffIdentity)
    throw std::runtime_error("NoiseCoefficients: eta outside [1/2^n, 1]");
  if (r < -tol::kCoeffIdentity || r > 1.0 + tol::kCoeffIdentity)
    throw std::runtime_error("NoiseCoefficients: r outside [0, 1]");
  const double lhs = r * (sn - 1.0);
  const double rhs = sn * nu - dn * eta;
  if (std::abs(lhs - rhs) > tol::kCoeffIdentity * sn)
    throw std::runtime_error("NoiseCoefficients: r identity violated");
}

LindbladSpec::LindbladSpec(int n, std::vector<CMatrix> jumps)
    : n_qubits(n), jump_ops(std::move(jumps)) {
  const auto d = static_cast<Eigen::Index>(dim(n));
  for (const CMatrix& l : jump_ops) {
    if (l.rows() != d || l.cols() != d)
      throw std::invalid_argument("LindbladSpec: jump operator is not 2^n x 2^n");
    if (std::abs(l.trace()) > tol::kTraceless)
      throw std::invalid_argument("LindbladSpec: jump operator is not traceless");
  }
}

Channel Channel::identity(int n_qubits) {
  Channel ch;
  ch.n_ = n_qubits;
  ch.label_ = "identity";
  ch.rep_ = Rep::kProduct;
  ch.factor_kraus_.assign(n_qubits, {Matrix2c::Identity()});
  ch.factor_ptms_.assign(n_qubits, RMatrix::Identity(4, 4));
  ch.finalize();
  return ch;
}

Channel Channel::from_kraus(std::vector<CMatrix> kraus, int n_qubits, std::string label) {
  Channel ch;
  ch.n_ = n_qubits;
  ch.label_ = std::move(label);
  if (n_qubits == 1) {
    ch.rep_ = Rep::kProduct;
    std::vector<Matrix2c> small;
    small.reserve(kraus.size());
    for (const CMatrix& a : kraus) {
      if (a.rows() != 2 || a.cols() != 2)
        throw std::invalid_argument("Channel::from_kraus: Kraus operator is not 2x2");
      small.push_back(a);
    }
    ch.factor_kraus_ = {std::move(small)};
    ch.factor_ptms_ = {ptm_from_kraus(kraus, 1).matrix};
  } else {
    if (n_qubits > tol::kMaxDensePtmQubits)
      throw std::invalid_argument("Channel::from_kraus: qubit count beyond the dense PTM cap");
    ch.rep_ = Rep::kKrausDense;
    ch.dense_ptm_ = ptm_from_kraus(kraus, n_qubits).matrix;
    ch.kraus_ = std::move(kraus);
  }
  ch.finalize();
  return ch;
}

Channel Channel::from_ptm(Ptm ptm, std::string label) {
  if (!ptm.has_cptp_first_row(tol::kPtmMatch))
    throw std::invalid_argument("Channel::from_ptm: PTM first row is not (1, 0, ..., 0)");
  Channel ch;
  ch.n_ = ptm.n_qubits;
  ch.label_ = std::move(label);
  ch.rep_ = Rep::kPtmOnly;
  ch.dense_ptm_ = std::move(ptm.matrix);
  ch.finalize();
  return ch;
}

void Channel::finalize() {
  const double dn = static_cast<double>(dim(n_));
  const double sn = dn * dn;
  NoiseCoefficients c;
  const double trace = ptm_trace();
  c.nu = ptm_frobenius_sq() / sn;
  switch (rep_) {
    case Rep::kProduct: {
      double eta = 1.0;
      for (const RMatrix& m : factor_ptms_) eta *= m.col(0).squaredNorm() / 2.0;
      c.eta = eta;
      break;
    }
    case Rep::kDepolarizing:
      c.eta = 1.0 / dn;
      break;
    default:
      c.eta = dense_ptm_.col(0).squaredNorm() / dn;
      break;
  }
  c.r = (sn * c.nu - dn * c.eta) / (sn - 1.0);
  c.p_eff = 1.0 - (trace - 1.0) / (sn - 1.0);
  coeffs_ = c;
}

double Channel::depolarizing_strength() const {
  if (rep_ != Rep::kDepolarizing)
    throw std::logic_error("Channel: not a global depolarizing channel");
  return depol_p_;
}

const std::vector<RMatrix>& Channel::factor_ptms() const {
  if (rep_ != Rep::kProduct) throw std::logic_error("Channel: no product factors");
  return factor_ptms_;
}

const std::vector<std::vector<Matrix2c>>& Channel::factor_kraus() const {
  if (rep_ != Rep::kProduct) throw std::logic_error("Channel: no product factors");
  return factor_kraus_;
}

bool Channel::has_kraus() const {
  switch (rep_) {
    case Rep::kKrausDense: return true;
    case Rep::kProduct: return true;
    default: return false;
  }
}

std::vector<CMatrix> Channel::kraus() const {
  if (rep_ == Rep::kKrausDense) return kraus_;
  if (rep_ != Rep::kProduct) throw std::logic_error("Channel: no Kraus representation");
  if (n_ > tol::kMaxDensePtmQubits)
    throw std::invalid_argument("Channel::kraus: expansion beyond the dense cap");
  // Outer product of the per-qubit lists.
  std::vector<CMatrix> acc = {CMatrix::Identity(1, 1)};
  for (const auto& factor : factor_kraus_) {
    std::vector<CMatrix> next;
    next.reserve(acc.size() * factor.size());
    for (const CMatrix& left : acc)
      for (const Matrix2c& right : factor)
        next.push_back(Eigen::kroneckerProduct(left, right).eval());
    acc = std::move(next);
  }
  return acc;
}

RMatrix Channel::materialized_ptm() const {
  switch (rep_) {
    case Rep::kKrausDense:
    case Rep::kPtmOnly:
      return dense_ptm_;
    case Rep::kDepolarizing: {
      const auto s = static_cast<Eigen::Index>(sdim(n_));
      RMatrix m = RMatrix::Identity(s, s) * (1.0 - depol_p_);
      m(0, 0) = 1.0;
      return m;
    }
    case Rep::kProduct: {
      if (n_ > tol::kMaxDensePtmQubits)
        throw std::invalid_argument("Channel: dense PTM beyond the cap");
      RMatrix acc = RMatrix::Identity(1, 1);
      for (const RMatrix& m : factor_ptms_)
        acc = Eigen::kroneckerProduct(acc, m).eval();
      return acc;
    }
  }
  throw std::logic_error("Channel: unknown representation");
}

double Channel::ptm_trace() const {
  switch (rep_) {
    case Rep::kProduct: {
      double acc = 1.0;
      for (const RMatrix& m : factor_ptms_) acc *= m.trace();
      return acc;
    }
    case Rep::kDepolarizing:
      return 1.0 + (static_cast<double>(sdim(n_)) - 1.0) * (1.0 - depol_p_);
    default:
      return dense_ptm_.trace();
  }
}

double Channel::ptm_frobenius_sq() const {
  switch (rep_) {
    case Rep::kProduct: {
      double acc = 1.0;
      for (const RMatrix& m : factor_ptms_) acc *= m.squaredNorm();
      return acc;
    }
    case Rep::kDepolarizing: {
      const double q = 1.0 - depol_p_;
      return 1.0 + (static_cast<double>(sdim(n_)) - 1.0) * q * q;
    }
    default:
      return dense_ptm_.squaredNorm();
  }
}

std::pair<double, double> Channel::gram_eigen_range() const {
  switch (rep_) {
    case Rep::kProduct: {
      double lo = 1.0, hi = 1.0;
      for (const RMatrix& m : factor_ptms_) {
        Eigen::SelfAdjointEigenSolver<RMatrix> es(m.transpose() * m, Eigen::EigenvaluesOnly);
        lo *= es.eigenvalues().minCoeff();
        hi *= es.eigenvalues().maxCoeff();
      }
      return {lo, hi};
    }
    case Rep::kDepolarizing: {
      const double q = (1.0 - depol_p_) * (1.0 - depol_p_);
      return {std::min(1.0, q), std::max(1.0, q)};
    }
    default: {
      Eigen::SelfAdjointEigenSolver<RMatrix> es(dense_ptm_.transpose() * dense_ptm_,
                                                Eigen::EigenvaluesOnly);
      return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
    }
  }
}

DensityMatrix Channel::apply(const DensityMatrix& rho) const {
  if (rho.n_qubits() != n_)
    throw std::invalid_argument("Channel::apply: dimension mismatch");
  CMatrix out = rho.matrix();
  CMatrix scratch, accum;
  apply_in_place(out, scratch, accum);
  return DensityMatrix::from_matrix_unchecked(n_, std::move(out));
}

void Channel::apply_in_place(CMatrix& rho, CMatrix& scratch, CMatrix& accum) const {
  const auto d = static_cast<Eigen::Index>(dim(n_));
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("Channel::apply_in_place: dimension mismatch");
  switch (rep_) {
    case Rep::kProduct: {
      if (scratch.rows() != d) scratch.resize(d, d);
      if (accum.rows() != d) accum.resize(d, d);
      for (int q = 0; q < n_; ++q)
        local::apply_kraus(rho, n_, q, factor_kraus_[q], scratch, accum);
      return;
    }
    case Rep::kDepolarizing: {
      const Complex mixed{depol_p_ / static_cast<double>(d), 0.0};
      const double keep = 1.0 - depol_p_;
      const Complex weighted_trace = mixed * rho.trace();
      rho *= keep;
      rho.diagonal().array() += weighted_trace;
      return;
    }
    case Rep::kKrausDense: {
      if (accum.rows() != d) accum.resize(d, d);
      accum.setZero();
      for (const CMatrix& a : kraus_) accum += a * rho * a.adjoint();
      rho.swap(accum);
      return;
    }
    case Rep::kPtmOnly: {
      VectorizedOperator v = vectorize(rho, n_);
      v.coefficients = dense_ptm_ * v.coefficients;
      rho = unvectorize(v);
      return;
    }
  }
}

Channel amplitude_damping(double gamma_down) {
  if (!(gamma_down >= 0.0 && gamma_down <= 1.0))
    throw std::invalid_argument("amplitude_damping: gamma outside [0, 1]");
  const double root = std::sqrt(1.0 - gamma_down);
  Matrix2c a0, a1;
  a0 << 1.0, 0.0, 0.0, root;
  a1 << 0.0, std::sqrt(gamma_down), 0.0, 0.0;
  RMatrix ptm = RMatrix::Zero(4, 4);
  ptm(0, 0) = 1.0;
  ptm(1, 1) = root;
  ptm(2, 2) = root;
  ptm(3, 0) = gamma_down;
  ptm(3, 3) = 1.0 - gamma_down;

  Channel ch;
  ch.n_ = 1;
  ch.label_ = "ad(" + std::to_string(gamma_down) + ")";
  ch.rep_ = Channel::Rep::kProduct;
  ch.factor_kraus_ = {{a0, a1}};
  ch.factor_ptms_ = {std::move(ptm)};
  ch.finalize();
  return ch;
}

Channel depolarizing(double p_eff, int n_qubits) {
  const double upper = 1.0 + 1.0 / (static_cast<double>(sdim(n_qubits)) - 1.0);
  if (!(p_eff >= 0.0 && p_eff <= upper + tol::kCoeffIdentity))
    throw std::invalid_argument("depolarizing: p_eff outside the twirl range");
  Channel ch;
  ch.n_ = n_qubits;
  ch.label_ = "depol(" + std::to_string(p_eff) + ")";
  ch.rep_ = Channel::Rep::kDepolarizing;
  ch.depol_p_ = p_eff;
  ch.finalize();
  return ch;
}

Channel tensor(const std::vector<Channel>& parts) {
  if (parts.empty()) throw std::invalid_argument("tensor: no parts");
  int total = 0;
  bool all_products = true;
  for (const Channel& part : parts) {
    total += part.n_qubits();
    all_products = all_products && part.is_product();
  }
  if (total > tol::kMaxStateQubits)
    throw std::invalid_argument("tensor: size overflow past the state cap");

  Channel ch;
  ch.n_ = total;
  std::string label = parts.front().label();
  for (std::size_t i = 1; i < parts.size(); ++i) label += " x " + parts[i].label();
  ch.label_ = std::move(label);

  if (all_products) {
    ch.rep_ = Channel::Rep::kProduct;
    for (const Channel& part : parts) {
      ch.factor_kraus_.insert(ch.factor_kraus_.end(), part.factor_kraus().begin(),
                              part.factor_kraus().end());
      ch.factor_ptms_.insert(ch.factor_ptms_.end(), part.factor_ptms().begin(),
                             part.factor_ptms().end());
    }
  } else {
    if (total > tol::kMaxDensePtmQubits)
      throw std::invalid_argument("tensor: size overflow past the dense PTM cap");
    ch.rep_ = Channel::Rep::kPtmOnly;
    RMatrix acc = RMatrix::Identity(1, 1);
    for (const Channel& part : parts)
      acc = Eigen::kroneckerProduct(acc, part.materialized_ptm()).eval();
    ch.dense_ptm_ = std::move(acc);
  }
  ch.finalize();
  return ch;
}

Channel tensor_power(const Channel& ch, int copies) {
  if (copies <= 0) throw std::invalid_argument("tensor_power: copies must be positive");
  return tensor(std::vector<Channel>(static_cast<std::size_t>(copies), ch));
}

NoiseCoefficients noise_coefficients(const Channel& ch) { return ch.coefficients(); }

Channel haar_twirl(const Channel& ch) {
  Channel twirled = depolarizing(ch.coefficients().p_eff, ch.n_qubits());
  return twirled;
}

RMatrix lindblad_dissipator_ptm(const LindbladSpec& spec) {
  const int n = spec.n_qubits;
  if (n > 3)
    throw std::invalid_argument("lindblad_dissipator_ptm: qubit count beyond the dense cap");
  const auto d = static_cast<Eigen::Index>(dim(n));
  const std::uint64_t words = PauliIndex::count(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  RMatrix out = RMatrix::Zero(static_cast<Eigen::Index>(words), static_cast<Eigen::Index>(words));
  for (std::uint64_t code = 0; code < words; ++code) {
    const CMatrix p = norm * pauli_op(PauliIndex::from_code(n, code));
    CMatrix image = CMatrix::Zero(d, d);
    for (const CMatrix& l : spec.jump_ops) {
      const CMatrix ll = l.adjoint() * l;
      image += l * p * l.adjoint() - 0.5 * (ll * p + p * ll);
    }
    const VectorizedOperator chi = vectorize(image, n);
    for (Eigen::Index row = 0; row < chi.coefficients.size(); ++row) {
      const Complex c = chi.coefficients(row);
      if (std::abs(c.imag()) > tol::kPtmImag)
        throw std::runtime_error("lindblad_dissipator_ptm: non-real PTM entry");
      out(row, static_cast<Eigen::Index>(code)) = c.real();
    }
  }
  return out;
}

Channel lindblad_channel(const LindbladSpec& spec, double strength) {
  if (strength < 0.0) throw std::invalid_argument("lindblad_channel: negative strength");
  const RMatrix generator = strength * lindblad_dissipator_ptm(spec);
  RMatrix ptm = generator.exp();
  // The generator has a zero first row, so the exponential is trace
  // preserving; scrub the residual numerical noise.
  ptm(0, 0) = 1.0;
  for (Eigen::Index col = 1; col < ptm.cols(); ++col) ptm(0, col) = 0.0;
  return Channel::from_ptm(Ptm{spec.n_qubits, std::move(ptm)},
                           "lindblad(t=" + std::to_string(strength) + ")");
}

double contraction_estimate(const Channel& ch, int n_pairs, Rng& rng) {
  if (n_pairs < 1) throw std::invalid_argument("contraction_estimate: n_pairs must be >= 1");
  const int n = ch.n_qubits();
  double best = 0.0;
  for (int i = 0; i < n_pairs; ++i) {
    const DensityMatrix rho1 = DensityMatrix::pure(random_pure_state(n, rng));
    const DensityMatrix rho2 = DensityMatrix::pure(random_pure_state(n, rng));
    const double before = trace_distance(rho1, rho2);
    if (before < 1e-12) continue;
    const double after = trace_distance(ch.apply(rho1), ch.apply(rho2));
    best = std::max(best, after / before);
  }
  return best;
}

DensityMatrix apply(const Channel& ch, const DensityMatrix& rho) { return ch.apply(rho); }

}  // namespace liom
