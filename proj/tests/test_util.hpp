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
//
// Random instance generators and brute-force oracles shared by the tests.
// Nothing here calls into the gather/scatter kernels it is used to check.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qaffine/linalg.hpp"
#include "qaffine/simulator.hpp"

namespace qaffine::testing {

class Random {
public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex_normal() { return {normal(), normal()}; }

  ComplexMatrix gaussian(Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      m.data()[i] = complex_normal();
    }
    return m;
  }

  ComplexVector unit_vector(Eigen::Index dim) {
    ComplexVector v = gaussian(dim, 1);
    return v / v.norm();
  }

  ComplexVector real_unit_vector(Eigen::Index dim) {
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      v(i) = normal();
    }
    return v / v.norm();
  }

  /// Haar-like unitary from the QR of a complex Gaussian matrix.
  ComplexMatrix unitary(Eigen::Index dim) {
    Eigen::HouseholderQR<ComplexMatrix> qr(gaussian(dim, dim));
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR();
    for (Eigen::Index i = 0; i < dim; ++i) {
      const Complex d = r(i, i);
      q.col(i) *= d / std::abs(d);
    }
    return q;
  }

  /// Random matrix with sigma_max drawn from [0.1, 1] (exactly 1 sometimes).
  ComplexMatrix contraction(Eigen::Index dim) {
    ComplexMatrix g = gaussian(dim, dim);
    Eigen::JacobiSVD<ComplexMatrix> svd(g);
    const double target = integer(0, 4) == 0 ? 1.0 : uniform(0.1, 1.0);
    return g * (target / svd.singularValues()(0));
  }

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// 2^q x 2^q matrix of `u` on `targets` (targets[i] is local bit i), built
/// entry by entry: <row|M|col> = u[local(row), local(col)] when all other
/// bits agree and the controls match, identity otherwise.
inline ComplexMatrix expand_operator(int q, const ComplexMatrix &u,
                                     const std::vector<int> &targets,
                                     const std::vector<int> &controls = {},
                                     const std::vector<int> &values = {}) {
  const std::uint64_t dim = std::uint64_t{1} << q;
  std::uint64_t target_mask = 0;
  for (int t : targets) {
    target_mask |= std::uint64_t{1} << t;
  }
  auto local = [&](std::uint64_t idx) {
    Eigen::Index l = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      l |= static_cast<Eigen::Index>((idx >> targets[i]) & 1U) << i;
    }
    return l;
  };
  auto controls_match = [&](std::uint64_t idx) {
    for (std::size_t i = 0; i < controls.size(); ++i) {
      if (static_cast<int>((idx >> controls[i]) & 1U) != values[i]) {
        return false;
      }
    }
    return true;
  };
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (std::uint64_t row = 0; row < dim; ++row) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      if ((row & ~target_mask) != (col & ~target_mask)) {
        continue;
      }
      const auto r = static_cast<Eigen::Index>(row);
      const auto c = static_cast<Eigen::Index>(col);
      if (controls_match(col)) {
        m(r, c) = u(local(row), local(col));
      } else if (row == col) {
        m(r, c) = 1.0;
      }
    }
  }
  return m;
}

/// Dense DFT matrix with entries e^{sign 2 pi i jk / M} / sqrt(M).
inline ComplexMatrix dft_matrix(Eigen::Index m, double sign) {
  ComplexMatrix f(m, m);
  const double pi = 3.14159265358979323846;
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      const double angle = sign * 2.0 * pi * static_cast<double>(j * k) / static_cast<double>(m);
      f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(m)), angle);
    }
  }
  return f;
}

} // namespace qaffine::testing
