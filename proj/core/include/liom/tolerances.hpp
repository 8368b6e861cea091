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

namespace liom::tol {

// All numerical tolerances and size caps used by the library live here.

/// Max entrywise |rho - rho^dagger| accepted for a density matrix.
inline constexpr double kHermitian = 1e-10;
/// |Tr(rho) - 1| accepted for a density matrix.
inline constexpr double kTrace = 1e-10;
/// Eigenvalues of states may undershoot 0 (or overshoot 1) by this much
/// before an operation reports a numerical failure; within the bound they
/// are clipped to [0, 1].
inline constexpr double kPsdEigen = 1e-9;
/// Max entrywise |U^dagger U - I| accepted for a unitary.
inline constexpr double kUnitary = 1e-10;
/// Round-trip error budget for vectorize/unvectorize.
inline constexpr double kRoundTrip = 1e-12;
/// Imaginary parts of PTM entries of Hermiticity-preserving maps must stay
/// below this before being truncated to zero.
inline constexpr double kPtmImag = 1e-12;
/// |sum_j A_j^dagger A_j - I| accepted for a Kraus decomposition.
inline constexpr double kKrausCompleteness = 1e-10;
/// Agreement required between the Kraus and PTM representations of the
/// same channel.
inline constexpr double kPtmMatch = 1e-9;
/// |Tr(L)| accepted for a Lindblad jump operator.
inline constexpr double kTraceless = 1e-10;
/// Slack for scalar identities between noise coefficients.
inline constexpr double kCoeffIdentity = 1e-9;

/// Largest qubit count for density-matrix level operations.
inline constexpr int kMaxStateQubits = 14;
/// Largest qubit count for operations on vectorized operators (4^n vectors).
inline constexpr int kMaxPtmQubits = 8;
/// Largest qubit count for which a dense 4^n x 4^n PTM may be materialized.
inline constexpr int kMaxDensePtmQubits = 6;

}  // namespace liom::tol
