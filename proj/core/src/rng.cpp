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

#include "liom/rng.hpp"

#include <cmath>
#include <numbers>

namespace liom {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& s : s_) s = splitmix64(sm);
}

Rng Rng::for_sample(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t sm = seed;
  std::uint64_t base = splitmix64(sm);
  std::uint64_t key = base ^ (k + 0x9e3779b97f4a7c15ULL) * 0xd1342543de82ef95ULL;
  return Rng(key);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller; u1 is kept away from 0.
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

CMatrix haar_unitary(int n_qubits, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim(n_qubits));
  CMatrix ginibre(d, d);
  for (Eigen::Index col = 0; col < d; ++col)
    for (Eigen::Index row = 0; row < d; ++row)
      ginibre(row, col) = rng.complex_normal();
  Eigen::HouseholderQR<CMatrix> qr(ginibre);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  // Fix the diagonal phases so the distribution is exactly Haar.
  for (Eigen::Index k = 0; k < d; ++k) {
    const Complex rkk = r(k, k);
    const double mag = std::abs(rkk);
    const Complex phase = mag > 0.0 ? rkk / mag : Complex{1.0, 0.0};
    q.col(k) *= phase;
  }
  return q;
}

CVector random_pure_state(int n_qubits, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim(n_qubits));
  CVector psi(d);
  for (Eigen::Index i = 0; i < d; ++i) psi(i) = rng.complex_normal();
  psi.normalize();
  return psi;
}

CMatrix random_mixed_state(int n_qubits, Rng& rng, int rank) {
  const auto d = static_cast<Eigen::Index>(dim(n_qubits));
  const Eigen::Index k = rank > 0 ? rank : d;
  CMatrix g(d, k);
  for (Eigen::Index col = 0; col < k; ++col)
    for (Eigen::Index row = 0; row < d; ++row) g(row, col) = rng.complex_normal();
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

CMatrix random_hermitian(int dimension, Rng& rng) {
  CMatrix a(dimension, dimension);
  for (Eigen::Index col = 0; col < dimension; ++col)
    for (Eigen::Index row = 0; row < dimension; ++row) a(row, col) = rng.complex_normal();
  return 0.5 * (a + a.adjoint());
}

}  // namespace liom
