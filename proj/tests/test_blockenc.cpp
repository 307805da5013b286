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

#include <gtest/gtest.h>

#include "qaffine/blockenc.hpp"
#include "qaffine/error.hpp"
#include "test_util.hpp"

namespace qaffine {
namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

TEST(BlockEncode, Identity) {
  const BlockEncoding enc = block_encode(ComplexMatrix::Identity(2, 2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.topLeftCorner(2, 2) = ComplexMatrix::Identity(2, 2);
  expected.bottomRightCorner(2, 2) = -ComplexMatrix::Identity(2, 2);
  EXPECT_LE(max_abs_diff(enc.unitary, expected), 1e-12);
  EXPECT_EQ(enc.alpha, 1.0);
  EXPECT_EQ(enc.block_dim, 2);
}

TEST(BlockEncode, ZeroMatrixIsSwap) {
  const BlockEncoding enc = block_encode(ComplexMatrix::Zero(2, 2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.topRightCorner(2, 2) = ComplexMatrix::Identity(2, 2);
  expected.bottomLeftCorner(2, 2) = ComplexMatrix::Identity(2, 2);
  EXPECT_LE(max_abs_diff(enc.unitary, expected), 1e-12);
  EXPECT_EQ(enc.alpha, 1.0);
}

TEST(BlockEncode, HalfIdentityFrozen) {
  const BlockEncoding enc = block_encode(0.5 * ComplexMatrix::Identity(2, 2));
  const double c = std::sqrt(3.0) / 2.0;
  ComplexMatrix expected(4, 4);
  expected << 0.5, 0, c, 0,
              0, 0.5, 0, c,
              c, 0, -0.5, 0,
              0, c, 0, -0.5;
  EXPECT_LE(max_abs_diff(enc.unitary, expected), 1e-12);
  EXPECT_TRUE(is_unitary(enc.unitary, 1e-12));
}

TEST(BlockEncode, RandomContractionsKeepAlphaOne) {
  testing::Random rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto dim = rng.integer(2, 16);
    const ComplexMatrix a = rng.contraction(dim);
    const BlockEncoding enc = block_encode(a);
    EXPECT_EQ(enc.alpha, 1.0);
    EXPECT_TRUE(is_unitary(enc.unitary, 1e-10));
    EXPECT_LE(max_abs_diff(enc.top_left(), a), 1e-10);
  }
}

TEST(BlockEncode, LargeNormGetsInflatedAlpha) {
  testing::Random rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto dim = rng.integer(2, 8);
    ComplexMatrix a = rng.contraction(dim);
    a *= rng.uniform(1.5, 10.0) / spectral_norm(a);
    const BlockEncoding enc = block_encode(a);
    const double sigma = spectral_norm(a);
    EXPECT_NEAR(enc.alpha, sigma * (1.0 + kAlphaGuard), 1e-12 * sigma);
    EXPECT_TRUE(is_unitary(enc.unitary, 1e-10));
    EXPECT_LE(max_abs_diff(enc.alpha * enc.top_left(), a), 1e-9);
  }
}

TEST(BlockEncode, RejectsNonSquare) {
  try {
    block_encode(ComplexMatrix::Zero(2, 3));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::Shape);
  }
}

TEST(EncodedApply, Examples) {
  ComplexVector x(4);
  x << 0.8, 0.6, 0, 0;
  QuantumState s =
      encoded_apply(init_amplitudes(x), block_encode(ComplexMatrix::Identity(2, 2)), {0, 1});
  EXPECT_NEAR(s.amplitude(0).real(), 0.8, 1e-12);
  EXPECT_NEAR(s.amplitude(1).real(), 0.6, 1e-12);

  x << 1, 0, 0, 0;
  s = encoded_apply(init_amplitudes(x), block_encode(0.5 * ComplexMatrix::Identity(2, 2)),
                    {0, 1});
  EXPECT_NEAR(s.amplitude(0).real(), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(1)), 0.0, 1e-12);
  EXPECT_NEAR(std::norm(s.amplitude(2)) + std::norm(s.amplitude(3)), 0.75, 1e-12);

  s = encoded_apply(init_amplitudes(x), block_encode(pauli_x()), {0, 1});
  EXPECT_NEAR(std::abs(s.amplitude(0)), 0.0, 1e-12);
  EXPECT_NEAR(s.amplitude(1).real(), 1.0, 1e-12);
}

TEST(EncodedApply, MatchesDirectProduct) {
  testing::Random rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = rng.integer(1, 3);
    const auto dim = Eigen::Index{1} << m;
    const ComplexMatrix a = rng.contraction(dim);
    const ComplexVector x = rng.unit_vector(dim);
    ComplexVector padded = ComplexVector::Zero(2 * dim);
    padded.head(dim) = x;
    const QuantumState s = encoded_apply(init_amplitudes(padded), block_encode(a),
                                         QubitIndexSet::range(0, m + 1));
    EXPECT_LE(max_abs_diff(s.amplitudes().head(dim), a * x), 1e-10);
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  }
}

TEST(EncodedApply, AncillaMustStartInZero) {
  ComplexVector x(4);
  x << 0, 0, 1, 0;
  try {
    encoded_apply(init_amplitudes(x), block_encode(ComplexMatrix::Identity(2, 2)), {0, 1});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(EncodedApply, TargetCountMustMatch) {
  EXPECT_THROW(
      encoded_apply(init_basis(3), block_encode(ComplexMatrix::Identity(2, 2)), {0, 1, 2}),
      Error);
}

} // namespace
} // namespace qaffine
