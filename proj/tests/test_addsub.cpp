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

#include "qaffine/addsub.hpp"
#include "qaffine/error.hpp"
#include "test_util.hpp"

namespace qaffine {
namespace {

ComplexVector vec(std::initializer_list<Complex> xs) {
  ComplexVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Complex x : xs) {
    v(i++) = x;
  }
  return v;
}

// (a + b)/2 stacked over (a - b)/2.
ComplexVector mix_oracle(const ComplexVector &a, const ComplexVector &b) {
  ComplexVector out(2 * a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out(i) = (a(i) + b(i)) / 2.0;
    out(a.size() + i) = (a(i) - b(i)) / 2.0;
  }
  return out;
}

TEST(StatePreparation, FirstColumnAndUnitarity) {
  testing::Random rng(31);
  for (int dim : {2, 4, 8, 32}) {
    const ComplexVector v = rng.unit_vector(dim);
    const ComplexMatrix u = state_preparation(v);
    EXPECT_TRUE(is_unitary(u, 1e-12));
    EXPECT_LE(max_abs_diff(u.col(0), v), 1e-14);
  }
  // Basis vectors that are not e_0 exercise the completion order.
  ComplexVector e3 = ComplexVector::Zero(4);
  e3(3) = 1.0;
  EXPECT_TRUE(is_unitary(state_preparation(e3), 1e-12));
}

TEST(AddSubFresh, BasisPair) {
  const AddSubResult r = hadamard_addsub_fresh(vec({1, 0}), vec({0, 1}));
  EXPECT_LE(max_abs_diff(r.state.amplitudes(), vec({0.5, 0.5, 0.5, -0.5})), 1e-12);
  ASSERT_EQ(r.sum_indices.size(), 2U);
  ASSERT_EQ(r.diff_indices.size(), 2U);
  EXPECT_EQ(r.sum_indices[0], 0U);
  EXPECT_EQ(r.diff_indices[0], 2U);
}

TEST(AddSubFresh, EqualInputsCancelDifference) {
  const double h = 1 / std::sqrt(2.0);
  const AddSubResult r = hadamard_addsub_fresh(vec({h, h}), vec({h, h}));
  EXPECT_LE(max_abs_diff(r.state.amplitudes(), vec({h, h, 0, 0})), 1e-12);
}

TEST(AddSubFresh, RandomPairsMatchOracle) {
  testing::Random rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const auto dim = Eigen::Index{1} << rng.integer(1, 5);
    const ComplexVector a = rng.unit_vector(dim);
    const ComplexVector b = rng.unit_vector(dim);
    const AddSubResult r = hadamard_addsub_fresh(a, b);
    EXPECT_LE(max_abs_diff(r.state.amplitudes(), mix_oracle(a, b)), 1e-12);
    EXPECT_NEAR(r.state.norm(), 1.0, 1e-12);
  }
}

TEST(AddSubFresh, Errors) {
  EXPECT_THROW(hadamard_addsub_fresh(vec({1, 0}), vec({1, 0, 0, 0})), Error);
  EXPECT_THROW(hadamard_addsub_fresh(vec({1, 0}), vec({0.5, 0})), Error);
}

TEST(AddSubInplace, Examples) {
  QuantumState s = hadamard_addsub_inplace(init_amplitudes(vec({1, 0})), vec({1, 0}),
                                           AddSubMode::Abstract);
  EXPECT_LE(max_abs_diff(s.amplitudes(), vec({1, 0, 0, 0})), 1e-12);

  s = hadamard_addsub_inplace(init_amplitudes(vec({0.8, 0.6})), vec({0.6, 0.8}),
                              AddSubMode::Abstract);
  EXPECT_LE(max_abs_diff(s.amplitudes(), vec({0.7, 0.7, 0.1, -0.1})), 1e-12);
}

TEST(AddSubInplace, SumPlusDiffRecoversState) {
  testing::Random rng(41);
  const ComplexVector phi = rng.unit_vector(16);
  const ComplexVector b = rng.unit_vector(16);
  const QuantumState s =
      hadamard_addsub_inplace(init_amplitudes(phi), b, AddSubMode::Abstract);
  const ComplexVector amps = s.amplitudes();
  EXPECT_LE(max_abs_diff(amps.head(16) + amps.tail(16), phi), 1e-12);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
}

TEST(AddSubInplace, ProjectionRecoversNormalizedSum) {
  testing::Random rng(43);
  const ComplexVector phi = rng.unit_vector(8);
  const ComplexVector b = rng.unit_vector(8);
  const QuantumState s =
      hadamard_addsub_inplace(init_amplitudes(phi), b, AddSubMode::Abstract);
  const ComplexVector sum = (phi + b) / (phi + b).norm();
  const ComplexVector diff = (phi - b) / (phi - b).norm();
  EXPECT_LE(max_abs_diff(project_ancilla(s, 3, 0), sum), 1e-10);
  EXPECT_LE(max_abs_diff(project_ancilla(s, 3, 1), diff), 1e-10);
}

TEST(AddSubInplace, PhysicalModeAgreesWithAbstract) {
  testing::Random rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    // Evolve |000> by a random unitary so the witness is a single block.
    const ComplexMatrix u = rng.unitary(8);
    Circuit witness(3);
    witness.append(Operation{u, {0, 1, 2}, {}, {}, "U"});
    const QuantumState evolved = run_circuit(witness);
    const ComplexVector b = rng.unit_vector(8);

    const QuantumState abstract =
        hadamard_addsub_inplace(evolved, b, AddSubMode::Abstract);
    const QuantumState physical =
        hadamard_addsub_inplace(evolved, b, AddSubMode::Physical, &witness);
    EXPECT_LE(max_abs_diff(abstract.amplitudes(), physical.amplitudes()), 1e-9);

    // The stage circuit, run after the witness, gives the same state.
    Circuit full(4);
    full.append(witness);
    full.append(addsub_stage_circuit(witness, b));
    EXPECT_LE(max_abs_diff(run_circuit(full).amplitudes(), abstract.amplitudes()), 1e-9);
  }
}

TEST(AddSubInplace, PhysicalModeNeedsWitness) {
  try {
    hadamard_addsub_inplace(init_basis(1), vec({1, 0}), AddSubMode::Physical);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingWitness);
  }
}

TEST(AddSubInplace, WrongWitnessIsRejected) {
  Circuit witness(1);
  witness.append(Operation{hadamard(), {0}, {}, {}, "H"});
  EXPECT_THROW(hadamard_addsub_inplace(init_basis(1), vec({1, 0}), AddSubMode::Physical,
                                       &witness),
               Error);
}

TEST(AddSubInplace, RejectsUnnormalizedTranslation) {
  try {
    hadamard_addsub_inplace(init_basis(1), vec({0.5, 0}), AddSubMode::Abstract);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::Normalization);
  }
}

} // namespace
} // namespace qaffine
