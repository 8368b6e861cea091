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

#include "liom/density_matrix.hpp"
#include "liom/types.hpp"

namespace liom {

/// Tr(rho^2), in [1/2^n, 1].
double purity(const DensityMatrix& rho);

/// T(rho, sigma) = ||rho - sigma||_1 / 2, in [0, 1].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// F(rho, sigma) = Tr sqrt(sqrt(rho) sigma sqrt(rho)), in [0, 1].
/// Eigenvalues are clipped to [0, 1] within the PSD tolerance.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Schatten p-norm (Tr |A|^p)^{1/p}; p = infinity gives the largest
/// singular value. Requires p >= 1.
double schatten_norm(const CMatrix& a, double p);

/// Quantum relative entropy D(rho || sigma) in bits. Returns +infinity when
/// the support of rho is not contained in the support of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace liom
