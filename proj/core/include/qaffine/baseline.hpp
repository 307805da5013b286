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
 * Single affine map through homogeneous coordinates: the 2N x 2N augmented
 * matrix [[A, 0 | B], [0, I]] acts linearly on (1/sqrt 2)[psi; 0...0; 1] and
 * is block-encoded into a 4N x 4N unitary.
 */
#pragma once

#include "qaffine/blockenc.hpp"

namespace qaffine {

struct AugmentedAffine {
  ComplexMatrix a_tilde;
  ComplexVector psi_tilde;
  BlockEncoding enc;
  /// Base register width n (N = 2^n).
  int n = 0;
};

/// B sits in the last column of the top half; the homogeneous 1 of psi_tilde
/// is its last entry.
AugmentedAffine build_augmented(const ComplexMatrix &a, const ComplexVector &b,
                                const ComplexVector &psi);

/// Simulates the dilation on n + 2 qubits and returns
/// sqrt(2) * alpha * (ancilla-zero amplitudes 0..N-1) = A psi + B.
ComplexVector run_augmented(const AugmentedAffine &aug);

} // namespace qaffine
