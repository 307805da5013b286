// Copyright 2026 The qaffine Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Dense complex linear algebra shared by every other module.
 *
 * Matrices and vectors are Eigen dense types. All tolerances are absolute in
 * the max-entry norm; inputs are expected to be O(1)-scaled.
 */
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qaffine {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

bool all_finite(const ComplexMatrix &m) noexcept;

/// Largest absolute entry of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest singular value. Throws InvalidInput on non-finite entries.
double spectral_norm(const ComplexMatrix &m);

bool is_hermitian(const ComplexMatrix &m, double tol = kHermitianTol);

/// True iff ||M^dagger M - I||_max <= tol. Non-square input is never unitary.
bool is_unitary(const ComplexMatrix &m, double tol);

/// Principal square root of a Hermitian positive semidefinite matrix via
/// eigendecomposition. Eigenvalues in [-1e-10, 0) are clamped to zero.
///
/// Throws InvalidInput if `m` is not Hermitian within 1e-10 and NotPsd if
/// an eigenvalue lies below -1e-10.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

/// Kronecker product a (x) b, with `a` acting on the more significant index.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Smallest max-entry distance between a and e^{i theta} b over theta.
/// Uses the phase of the largest-magnitude entry of `b` as the reference.
double max_abs_diff_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b);

} // namespace qaffine
