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
 * Hadamard-supported element-wise addition and subtraction of amplitude
 * vectors.
 *
 * An ancilla is put in superposition, the two halves of the register are
 * conditionally prepared with the two operands, and a second Hadamard mixes
 * them. The new ancilla is always the most significant qubit; its |0> half
 * holds (a + b)/2 and its |1> half holds (a - b)/2.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "qaffine/simulator.hpp"

namespace qaffine {

enum class AddSubMode {
  /// Writes the mixed superposition directly into the statevector.
  Abstract,
  /// Runs H, controlled(witness^dg then prep(b)), H using a circuit that
  /// prepares the current state from |0...0>.
  Physical,
};

struct AddSubResult {
  QuantumState state;
  std::vector<std::uint64_t> sum_indices;
  std::vector<std::uint64_t> diff_indices;
};

/// Unitary whose first column is `v` (unit norm within 1e-8), completed by
/// Gram-Schmidt over the standard basis.
ComplexMatrix state_preparation(const ComplexVector &v);

/// 2x2 Hadamard.
ComplexMatrix hadamard();

/// Both operands are prepared from |0...0> under an anti-control and a
/// control on a fresh ancilla.
AddSubResult hadamard_addsub_fresh(const ComplexVector &psi_a,
                                   const ComplexVector &psi_b);

/// Block-level circuit of one add/sub stage on q + 1 qubits, where q is the
/// width of `witness` and qubit q is the new ancilla.
Circuit addsub_stage_circuit(const Circuit &witness, const ComplexVector &b_tilde);

/// Prepends an ancilla and mixes the current amplitudes phi with `b_tilde`:
/// the |0> half becomes (phi + b_tilde)/2, the |1> half (phi - b_tilde)/2.
///
/// In physical mode `witness` must prepare `state` from |0...0> within 1e-9;
/// a null witness raises MissingWitness.
QuantumState hadamard_addsub_inplace(QuantumState state,
                                     const ComplexVector &b_tilde, AddSubMode mode,
                                     const Circuit *witness = nullptr);

/// Projects onto `ancilla` == `value` and renormalizes the remaining
/// amplitudes (ancilla bit removed from the index).
ComplexVector project_ancilla(const QuantumState &state, int ancilla, int value);

} // namespace qaffine
