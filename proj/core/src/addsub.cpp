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
#include "qaffine/addsub.hpp"

#include <cmath>
#include <sstream>

#include "qaffine/error.hpp"

namespace qaffine {

namespace {

constexpr double kOperandNormTol = 1e-8;
constexpr double kWitnessTol = 1e-9;

void check_unit(const ComplexVector &v, const char *name) {
  if (!all_finite(v)) {
    fail(ErrorKind::InvalidInput, "finite_entries",
         std::string(name) + " has non-finite entries");
  }
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > kOperandNormTol) {
    std::ostringstream msg;
    msg << name << " has norm " << norm << ", expected 1 within 1e-8";
    fail(ErrorKind::Normalization, "unit_norm", msg.str());
  }
}

int qubits_for(Eigen::Index dim, const char *name) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    fail(ErrorKind::Shape, "power_of_two_dim",
         std::string(name) + " length must be a power of two >= 2");
  }
  int q = 0;
  while ((Eigen::Index{1} << q) < dim) {
    ++q;
  }
  return q;
}

} // namespace

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2);
  h << s, s, s, -s;
  return h;
}

ComplexMatrix state_preparation(const ComplexVector &v) {
  check_unit(v, "state vector");
  const Eigen::Index dim = v.size();
  ComplexMatrix u(dim, dim);
  u.col(0) = v / v.norm();
  Eigen::Index filled = 1;
  // Acceptance threshold on the residual; at most one basis vector can be
  // (nearly) dependent, so the loop always fills every column.
  constexpr double kAccept = 1e-3;
  for (Eigen::Index e = 0; e < dim && filled < dim; ++e) {
    ComplexVector w = ComplexVector::Zero(dim);
    w(e) = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < filled; ++c) {
        w -= u.col(c) * u.col(c).dot(w);
      }
    }
    const double norm = w.norm();
    if (norm > kAccept) {
      u.col(filled++) = w / norm;
    }
  }
  if (filled != dim) {
    fail(ErrorKind::InvalidInput, "basis_completion",
         "state_preparation: Gram-Schmidt completion failed");
  }
  return u;
}

AddSubResult hadamard_addsub_fresh(const ComplexVector &psi_a,
                                   const ComplexVector &psi_b) {
  if (psi_a.size() != psi_b.size()) {
    fail(ErrorKind::Shape, "equal_dims", "add/sub operands differ in length");
  }
  const int n = qubits_for(psi_a.size(), "operand");
  check_unit(psi_a, "psi_a");
  check_unit(psi_b, "psi_b");

  const int ancilla = n;
  const auto reg = QubitIndexSet::range(0, n);
  QuantumState state = init_basis(n + 1);
  state = apply_unitary(std::move(state), hadamard(), {ancilla});
  state = apply_controlled(std::move(state), state_preparation(psi_a), reg,
                           {ancilla}, {0});
  state = apply_controlled(std::move(state), state_preparation(psi_b), reg,
                           {ancilla}, {1});
  state = apply_unitary(std::move(state), hadamard(), {ancilla});

  AddSubResult result{std::move(state), {}, {}};
  const std::uint64_t half = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < half; ++i) {
    result.sum_indices.push_back(i);
    result.diff_indices.push_back(half + i);
  }
  return result;
}

Circuit addsub_stage_circuit(const Circuit &witness, const ComplexVector &b_tilde) {
  const int q = witness.num_qubits();
  if (b_tilde.size() != (Eigen::Index{1} << q)) {
    fail(ErrorKind::Shape, "translation_matches_register",
         "b_tilde length differs from the register dimension");
  }
  const int ancilla = q;
  Circuit branch(q);
  branch.append(witness.adjoint());
  branch.append(Operation{state_preparation(b_tilde), QubitIndexSet::range(0, q),
                          {}, {}, "prep(b)"});

  Circuit stage(q + 1);
  stage.append(Operation{hadamard(), {ancilla}, {}, {}, "H"});
  stage.append(branch.controlled(ancilla, 1));
  stage.append(Operation{hadamard(), {ancilla}, {}, {}, "H"});
  return stage;
}

QuantumState hadamard_addsub_inplace(QuantumState state,
                                     const ComplexVector &b_tilde, AddSubMode mode,
                                     const Circuit *witness) {
  if (b_tilde.size() != static_cast<Eigen::Index>(state.dim())) {
    fail(ErrorKind::Shape, "translation_matches_register",
         "b_tilde length differs from the register dimension");
  }
  check_unit(b_tilde, "b_tilde");

  if (mode == AddSubMode::Abstract) {
    const ComplexVector b = b_tilde / b_tilde.norm();
    const ComplexVector &phi = state.amplitudes();
    ComplexVector out(2 * phi.size());
    out.head(phi.size()) = 0.5 * (phi + b);
    out.tail(phi.size()) = 0.5 * (phi - b);
    return QuantumState::adopt(std::move(out));
  }

  if (witness == nullptr) {
    fail(ErrorKind::MissingWitness, "physical_witness",
         "physical add/sub needs the circuit that prepared the current state");
  }
  if (witness->num_qubits() != state.num_qubits()) {
    fail(ErrorKind::Shape, "register_width",
         "witness circuit width differs from the state");
  }
  const QuantumState rebuilt = run_circuit(*witness);
  if (max_abs_diff(rebuilt.amplitudes(), state.amplitudes()) > kWitnessTol) {
    fail(ErrorKind::Precondition, "witness_reconstructs_state",
         "witness circuit does not reproduce the current state within 1e-9");
  }
  const Circuit stage = addsub_stage_circuit(*witness, b_tilde);
  state.prepend_qubit();
  return run_circuit(stage, std::move(state));
}

ComplexVector project_ancilla(const QuantumState &state, int ancilla, int value) {
  if (ancilla < 0 || ancilla >= state.num_qubits()) {
    fail(ErrorKind::Index, "qubit_in_range", "project_ancilla: ancilla out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << ancilla;
  const std::uint64_t low_mask = bit - 1;
  ComplexVector out(static_cast<Eigen::Index>(state.dim() / 2));
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    if (((i & bit) != 0) != (value != 0)) {
      continue;
    }
    const std::uint64_t packed = ((i >> (ancilla + 1)) << ancilla) | (i & low_mask);
    out(static_cast<Eigen::Index>(packed)) = state.amplitudes()(static_cast<Eigen::Index>(i));
  }
  const double norm = out.norm();
  if (norm == 0.0) {
    fail(ErrorKind::Precondition, "nonzero_branch",
         "project_ancilla: branch has zero probability");
  }
  return out / norm;
}

} // namespace qaffine
