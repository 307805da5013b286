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
#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "qaffine/blockenc.hpp"
#include "qaffine/error.hpp"
#include "qaffine/linalg.hpp"
#include "test_util.hpp"

namespace qaffine {
namespace {

TEST(SpectralNorm, TrivialCases) {
  EXPECT_NEAR(spectral_norm(ComplexMatrix::Identity(4, 4)), 1.0, 1e-12);
  EXPECT_EQ(spectral_norm(ComplexMatrix::Zero(3, 3)), 0.0);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = 0.3;
  EXPECT_NEAR(spectral_norm(d), 0.5, 1e-12);
}

TEST(SpectralNorm, RectangularInput) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 3);
  m(0, 2) = Complex(0.0, 2.0);
  EXPECT_NEAR(spectral_norm(m), 2.0, 1e-12);
}

TEST(SpectralNorm, RejectsNonFinite) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 0) = std::numeric_limits<double>::quiet_NaN();
  try {
    spectral_norm(m);
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(SpectralNorm, AbsoluteHomogeneity) {
  testing::Random rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto dim = rng.integer(1, 8);
    const ComplexMatrix m = rng.gaussian(dim, rng.integer(1, 8));
    const Complex c = rng.complex_normal();
    const double base = spectral_norm(m);
    EXPECT_NEAR(spectral_norm(c * m), std::abs(c) * base, 1e-10 * std::abs(c) * base);
  }
}

TEST(PsdSqrt, TrivialCases) {
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  EXPECT_LE(max_abs_diff(psd_sqrt(id), id), 1e-12);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 2.0;
  expected(1, 1) = 3.0;
  EXPECT_LE(max_abs_diff(psd_sqrt(d), expected), 1e-12);
}

TEST(PsdSqrt, SquaresBackForRandomGram) {
  testing::Random rng(7);
  for (int dim : {2, 3, 8, 16, 64}) {
    const ComplexMatrix g = rng.gaussian(dim, dim) / std::sqrt(static_cast<double>(dim));
    const ComplexMatrix m = g.adjoint() * g;
    const ComplexMatrix s = psd_sqrt(m);
    EXPECT_LE(max_abs_diff(s * s, m), 1e-9) << "dim " << dim;
    EXPECT_TRUE(is_hermitian(s, 1e-10)) << "dim " << dim;
  }
}

TEST(PsdSqrt, ClampsTinyNegativeEigenvalues) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -5e-11;
  const ComplexMatrix s = psd_sqrt(m);
  EXPECT_NEAR(s(1, 1).real(), 0.0, 1e-15);
  EXPECT_NEAR(s(0, 0).real(), 1.0, 1e-15);
}

TEST(PsdSqrt, RejectsNegativeEigenvalue) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 1) = -1e-6;
  try {
    psd_sqrt(m);
    FAIL() << "expected not-PSD";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPsd);
  }
}

TEST(PsdSqrt, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 1e-6;
  try {
    psd_sqrt(m);
    FAIL() << "expected invalid input";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(IsUnitary, Examples) {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  EXPECT_TRUE(is_unitary(h, 1e-12));

  ComplexMatrix d = ComplexMatrix::Identity(2, 2);
  d(1, 1) = 0.5;
  EXPECT_FALSE(is_unitary(d, 1e-6));

  testing::Random rng(3);
  const BlockEncoding enc = block_encode(rng.contraction(4));
  EXPECT_TRUE(is_unitary(enc.unitary, 1e-10));

  EXPECT_FALSE(is_unitary(ComplexMatrix::Identity(2, 3), 1.0));
}

TEST(Kron, MatchesDefinition) {
  testing::Random rng(5);
  const ComplexMatrix a = rng.gaussian(2, 3);
  const ComplexMatrix b = rng.gaussian(3, 2);
  const ComplexMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 6);
  EXPECT_EQ(k(4, 5), a(1, 2) * b(1, 1));
}

} // namespace
} // namespace qaffine
