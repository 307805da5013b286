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
 * Exact synthesis of small unitaries into single-qubit gates and CNOTs.
 *
 * The decomposition is the quantum Shannon decomposition: a cosine-sine
 * split on the most significant qubit, demultiplexing of the two
 * block-diagonal factors, and recursive expansion of the resulting
 * uniformly controlled Ry/Rz rotations.
 */
#pragma once

#include <string>
#include <vector>

#include "qaffine/simulator.hpp"

namespace qaffine {

struct Gate {
  enum class Kind { SingleQubit, Cnot };

  Kind kind = Kind::SingleQubit;
  Eigen::Matrix2cd matrix = Eigen::Matrix2cd::Identity();
  int target = 0;
  /// Meaningful for Cnot only.
  int control = -1;
};

class GateList {
public:
  explicit GateList(int qubit_count = 0) : qubit_count_(qubit_count) {}

  int qubit_count() const noexcept { return qubit_count_; }
  const std::vector<Gate> &gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  void add_single(const Eigen::Matrix2cd &m, int target);
  void add_cnot(int control, int target);
  void append(const GateList &other);

  /// Dense product (qubit_count <= 12).
  ComplexMatrix to_matrix() const;
  QuantumState run(QuantumState state) const;

private:
  int qubit_count_;
  std::vector<Gate> gates_;
};

struct GateCountReport {
  std::size_t single_qubit = 0;
  std::size_t multi_qubit = 0;
  std::size_t total = 0;

  bool operator==(const GateCountReport &) const = default;
};

/// Gates whose product equals `u` (2^qubits x 2^qubits, unitary within 1e-9,
/// qubits <= 5). Local qubit i is bit i of the matrix index.
GateList synthesize(const ComplexMatrix &u, int qubits);

/// Lowers every block-level operation of `circuit` to elementary gates.
/// Controlled blocks are synthesized as unitaries on targets + controls.
GateList lower_circuit(const Circuit &circuit);

/// Merges runs of single-qubit gates on the same qubit.
GateList fuse_single_qubit_gates(const GateList &gates);

GateCountReport count_gates(const GateList &gates);

struct MethodComparison {
  GateCountReport ours;
  GateCountReport augmented;
  double ours_reconstruction_error = 0.0;
  double augmented_reconstruction_error = 0.0;
  /// A psi + B read back from each synthesized circuit.
  ComplexVector ours_result;
  ComplexVector augmented_result;
  ComplexVector classical_result;
  double agreement = 0.0;
  std::string note;
};

/// Builds both 4-qubit circuits for one affine step on a 2-qubit register:
/// the sequential method in physical mode (8x8 dilation of A) and the
/// augmented-matrix method (16x16 dilation of the augmented matrix), then
/// synthesizes and simulates them. Throws Precondition if the synthesized
/// circuits disagree beyond 1e-8.
MethodComparison compare_methods(const ComplexMatrix &a, const ComplexVector &b,
                                 const ComplexVector &psi);

} // namespace qaffine
