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
#include "qaffine/blockenc.hpp"

#include <cmath>
#include <sstream>

#include "qaffine/error.hpp"

namespace qaffine {

BlockEncoding block_encode(const ComplexMatrix &a) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    fail(ErrorKind::Shape, "square_matrix", "block_encode: matrix must be square");
  }
  if (!all_finite(a)) {
    fail(ErrorKind::InvalidInput, "finite_entries", "block_encode: non-finite entries");
  }
  // One SVD feeds both defect blocks. Two independent eigensolvers would
  // disagree by ~sqrt(eps) on singular values at 1 and break unitarity.
  Eigen::BDCSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd &sv = svd.singularValues();
  const double sigma = sv(0);
  const double alpha = sigma > 1.0 + kAlphaGuard ? sigma * (1.0 + kAlphaGuard) : 1.0;
  const ComplexMatrix scaled = a / alpha;
  const Eigen::Index m = a.rows();

  Eigen::VectorXd defect(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double s = sv(i) / alpha;
    const double d = (1.0 - s) * (1.0 + s);
    if (d < -1e-10) {
      fail(ErrorKind::Encoding, "defect_psd",
           "block_encode: I - A^dg A is not positive semidefinite");
    }
    defect(i) = std::sqrt(std::max(d, 0.0));
  }
  const ComplexMatrix &w = svd.matrixU();
  const ComplexMatrix &v = svd.matrixV();
  const ComplexMatrix top_right = w * defect.cast<Complex>().asDiagonal() * w.adjoint();
  const ComplexMatrix bottom_left = v * defect.cast<Complex>().asDiagonal() * v.adjoint();

  BlockEncoding enc;
  enc.alpha = alpha;
  enc.block_dim = m;
  enc.unitary.resize(2 * m, 2 * m);
  enc.unitary.topLeftCorner(m, m) = scaled;
  enc.unitary.topRightCorner(m, m) = top_right;
  enc.unitary.bottomLeftCorner(m, m) = bottom_left;
  enc.unitary.bottomRightCorner(m, m) = -scaled.adjoint();
  return enc;
}

QuantumState encoded_apply(QuantumState state, const BlockEncoding &enc,
                           const QubitIndexSet &targets) {
  if (targets.empty() ||
      (Eigen::Index{1} << (targets.size() - 1)) != enc.block_dim) {
    std::ostringstream msg;
    msg << "encoded_apply: block dimension " << enc.block_dim << " needs "
        << "log2(block_dim) + 1 targets, got " << targets.size();
    fail(ErrorKind::Shape, "matrix_matches_targets", msg.str());
  }
  const int ancilla = targets[targets.size() - 1];
  if (ancilla >= state.num_qubits()) {
    fail(ErrorKind::Index, "qubit_in_range", "encoded_apply: ancilla out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << ancilla;
  double leak = 0.0;
  const ComplexVector &amps = state.amplitudes();
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (static_cast<std::uint64_t>(i) & bit) {
      leak += std::norm(amps(i));
    }
  }
  if (std::sqrt(leak) > 1e-10) {
    fail(ErrorKind::Precondition, "ancilla_in_zero",
         "encoded_apply: dilation ancilla is not in |0>");
  }
  return apply_unitary(std::move(state), enc.unitary, targets);
}

} // namespace qaffine
