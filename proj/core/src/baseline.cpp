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
#include "qaffine/baseline.hpp"

#include <cmath>

#include "qaffine/error.hpp"

namespace qaffine {

AugmentedAffine build_augmented(const ComplexMatrix &a, const ComplexVector &b,
                                const ComplexVector &psi) {
  const Eigen::Index dim = a.rows();
  if (a.cols() != dim || b.size() != dim || psi.size() != dim) {
    fail(ErrorKind::Shape, "augmented_shapes",
         "build_augmented: A must be N x N with B and psi of length N");
  }
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    fail(ErrorKind::Shape, "power_of_two_dim",
         "build_augmented: N must be a power of two >= 2");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-8) {
    fail(ErrorKind::Normalization, "psi_unit_norm",
         "build_augmented: psi must be normalized");
  }

  AugmentedAffine aug;
  aug.n = 0;
  while ((Eigen::Index{1} << aug.n) < dim) {
    ++aug.n;
  }
  aug.a_tilde = ComplexMatrix::Zero(2 * dim, 2 * dim);
  aug.a_tilde.topLeftCorner(dim, dim) = a;
  aug.a_tilde.block(0, 2 * dim - 1, dim, 1) = b;
  aug.a_tilde.bottomRightCorner(dim, dim) = ComplexMatrix::Identity(dim, dim);

  const double s = 1.0 / std::sqrt(2.0);
  aug.psi_tilde = ComplexVector::Zero(2 * dim);
  aug.psi_tilde.head(dim) = s * psi / psi.norm();
  aug.psi_tilde(2 * dim - 1) = s;

  aug.enc = block_encode(aug.a_tilde);
  return aug;
}

ComplexVector run_augmented(const AugmentedAffine &aug) {
  const int n = aug.n;
  QuantumState state = init_amplitudes(aug.psi_tilde);
  state.prepend_qubit();
  state = encoded_apply(std::move(state), aug.enc, QubitIndexSet::range(0, n + 2));
  const Eigen::Index dim = Eigen::Index{1} << n;
  return std::sqrt(2.0) * aug.enc.alpha * state.amplitudes().head(dim);
}

} // namespace qaffine
