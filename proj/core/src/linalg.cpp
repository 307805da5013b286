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
#include "qaffine/linalg.hpp"

#include <cmath>
#include <sstream>

#include "qaffine/error.hpp"

namespace qaffine {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::InvalidInput:
    return "invalid-input";
  case ErrorKind::NotPsd:
    return "not-psd";
  case ErrorKind::Shape:
    return "shape";
  case ErrorKind::Normalization:
    return "normalization";
  case ErrorKind::Unitarity:
    return "unitarity";
  case ErrorKind::Index:
    return "index";
  case ErrorKind::Capacity:
    return "capacity";
  case ErrorKind::Encoding:
    return "encoding";
  case ErrorKind::Precondition:
    return "precondition";
  case ErrorKind::Contraction:
    return "contraction";
  case ErrorKind::MissingWitness:
    return "missing-witness";
  case ErrorKind::Schema:
    return "schema";
  }
  return "unknown";
}

bool all_finite(const ComplexMatrix &m) noexcept {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      return false;
    }
  }
  return true;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::Shape, "same_shape", "max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) {
    return 0.0;
  }
  return (a - b).cwiseAbs().maxCoeff();
}

double spectral_norm(const ComplexMatrix &m) {
  if (!all_finite(m)) {
    fail(ErrorKind::InvalidInput, "finite_entries",
         "spectral_norm: matrix has non-finite entries");
  }
  if (m.size() == 0) {
    return 0.0;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
  if (m.rows() != m.cols()) {
    return false;
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
  if (m.rows() != m.cols() || m.size() == 0) {
    return false;
  }
  const ComplexMatrix gram = m.adjoint() * m;
  const auto id = ComplexMatrix::Identity(m.rows(), m.cols());
  return (gram - id).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
  if (!all_finite(m)) {
    fail(ErrorKind::InvalidInput, "finite_entries",
         "psd_sqrt: matrix has non-finite entries");
  }
  if (!is_hermitian(m, kHermitianTol)) {
    fail(ErrorKind::InvalidInput, "hermitian",
         "psd_sqrt: matrix is not Hermitian within 1e-10");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sym);
  if (eig.info() != Eigen::Success) {
    fail(ErrorKind::InvalidInput, "hermitian",
         "psd_sqrt: eigendecomposition did not converge");
  }
  Eigen::VectorXd values = eig.eigenvalues();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) < -kPsdTol) {
      std::ostringstream msg;
      msg << "psd_sqrt: eigenvalue " << values(i) << " below -1e-10";
      fail(ErrorKind::NotPsd, "positive_semidefinite", msg.str());
    }
    values(i) = std::sqrt(std::max(values(i), 0.0));
  }
  const ComplexMatrix &vecs = eig.eigenvectors();
  ComplexMatrix root = vecs * values.cast<Complex>().asDiagonal() * vecs.adjoint();
  // Reassembly leaves O(eps) anti-Hermitian noise.
  return 0.5 * (root + root.adjoint());
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double max_abs_diff_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::Shape, "same_shape",
         "max_abs_diff_up_to_phase: shape mismatch");
  }
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  Complex phase{1.0, 0.0};
  if (std::abs(b(r, c)) > 0.0 && std::abs(a(r, c)) > 0.0) {
    const Complex ratio = a(r, c) / b(r, c);
    phase = ratio / std::abs(ratio);
  }
  return max_abs_diff(a, phase * b);
}

} // namespace qaffine
