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
#pragma once

#include "qaffine/linalg.hpp"
#include "qaffine/simulator.hpp"

namespace qaffine {

/// Unitary dilation
///
///     U = [[A/alpha,                 sqrt(I - (A/alpha)(A/alpha)^dg)],
///          [sqrt(I - (A/alpha)^dg (A/alpha)),           -(A/alpha)^dg]]
///
/// of an M x M matrix A. The dilation ancilla selects the block row/column,
/// so it is the most significant qubit of the 2M-dimensional space.
struct BlockEncoding {
  ComplexMatrix unitary;
  double alpha = 1.0;
  Eigen::Index block_dim = 0;

  /// Top-left block, i.e. A / alpha.
  ComplexMatrix top_left() const { return unitary.topLeftCorner(block_dim, block_dim); }
};

/// Relative inflation of alpha applied when sigma_max(A) > 1.
inline constexpr double kAlphaGuard = 1e-12;

/// alpha = sigma_max(A) * (1 + 1e-12) when sigma_max(A) exceeds 1 by more
/// than that guard, else exactly 1. Both defect blocks come from a single SVD
/// of A / alpha. Throws Shape for non-square input, InvalidInput for
/// non-finite entries and Encoding if a defect block is numerically not PSD.
BlockEncoding block_encode(const ComplexMatrix &a);

/// Applies `enc.unitary` to `targets`, whose last entry is the dilation
/// ancilla. The ancilla must carry at most 1e-10 amplitude norm in |1>.
QuantumState encoded_apply(QuantumState state, const BlockEncoding &enc,
                           const QubitIndexSet &targets);

} // namespace qaffine
