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
 * Dense statevector engine.
 *
 * Qubit ordering: qubit j is bit j of the basis index, so qubit q-1 is the
 * most significant bit. Within an applied unitary, `targets[i]` maps to bit i
 * of the local index; the last target is the most significant local qubit.
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "qaffine/linalg.hpp"

namespace qaffine {

inline constexpr int kMaxQubits = 24;
inline constexpr double kNormTol = 1e-10;

/// Ordered list of distinct qubit indices.
class QubitIndexSet {
public:
  QubitIndexSet() = default;
  QubitIndexSet(std::initializer_list<int> qubits);
  explicit QubitIndexSet(std::vector<int> qubits);

  /// Qubits lo, lo+1, ..., hi-1.
  static QubitIndexSet range(int lo, int hi);

  std::size_t size() const noexcept { return qubits_.size(); }
  bool empty() const noexcept { return qubits_.empty(); }
  int operator[](std::size_t i) const { return qubits_[i]; }
  auto begin() const noexcept { return qubits_.begin(); }
  auto end() const noexcept { return qubits_.end(); }
  const std::vector<int> &qubits() const noexcept { return qubits_; }
  bool contains(int qubit) const noexcept;

  /// Copy with `qubit` appended as the new most significant entry.
  QubitIndexSet with(int qubit) const;

  bool operator==(const QubitIndexSet &) const = default;

private:
  std::vector<int> qubits_;
};

class QuantumState {
public:
  /// All-zeros register |0...0> on `num_qubits` qubits (1..24).
  static QuantumState basis(int num_qubits);

  /// Amplitude-encoded register. `amplitudes` must have power-of-two length
  /// and unit norm within 1e-8; it is renormalized to machine precision.
  static QuantumState from_amplitudes(const ComplexVector &amplitudes);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const ComplexVector &amplitudes() const noexcept { return amps_; }
  Complex amplitude(std::size_t index) const;
  double norm() const { return amps_.norm(); }

  /// Adds a new most significant qubit in |0>.
  void prepend_qubit();

  /// Replaces the amplitudes with `amps`, which must be unit norm within
  /// 1e-10 and of length 2^q for 1 <= q <= 24. Used by operations that build
  /// the target superposition directly.
  static QuantumState adopt(ComplexVector amps);

  ComplexVector &mutable_amplitudes() noexcept { return amps_; }

private:
  QuantumState(int num_qubits, ComplexVector amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  int num_qubits_ = 0;
  ComplexVector amps_;
};

/// One block-level instruction: `matrix` acting on `targets`, conditioned on
/// each `controls[i]` equalling `control_values[i]`.
struct Operation {
  ComplexMatrix matrix;
  QubitIndexSet targets;
  QubitIndexSet controls;
  std::vector<int> control_values;
  std::string label;
};

/// Ordered block-level program over a fixed number of qubits.
class Circuit {
public:
  explicit Circuit(int num_qubits = 0) : num_qubits_(num_qubits) {}

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Operation> &operations() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }

  void set_num_qubits(int num_qubits);
  void append(Operation op);
  void append(const Circuit &other);

  Circuit adjoint() const;
  /// Every operation gains the extra control (`control`, `value`).
  Circuit controlled(int control, int value) const;

  /// Dense 2^q x 2^q matrix of the whole program (q <= 12).
  ComplexMatrix to_matrix() const;

private:
  int num_qubits_;
  std::vector<Operation> ops_;
};

struct ShotHistogram {
  std::uint64_t shots = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
};

QuantumState init_basis(int num_qubits);
QuantumState init_amplitudes(const ComplexVector &x);

QuantumState apply_unitary(QuantumState state, const ComplexMatrix &u,
                           const QubitIndexSet &targets);

QuantumState apply_controlled(QuantumState state, const ComplexMatrix &u,
                              const QubitIndexSet &targets,
                              const QubitIndexSet &controls,
                              const std::vector<int> &control_values);

QuantumState apply_operation(QuantumState state, const Operation &op);
QuantumState run_circuit(const Circuit &circuit, QuantumState state);
/// Runs `circuit` from |0...0>.
QuantumState run_circuit(const Circuit &circuit);

ComplexVector get_amplitudes(const QuantumState &state,
                             const std::vector<std::uint64_t> &indices);

/// Multinomial draw of `shots` computational-basis measurements.
///
/// The generator is std::mt19937_64 seeded with `seed`; each shot consumes
/// one 64-bit output, mapped to u in [0, 1) from its top 53 bits, and selects
/// the first index whose cumulative probability exceeds u.
ShotHistogram sample(const QuantumState &state, std::uint64_t shots,
                     std::uint64_t seed);

namespace kernels {

/// Applies `u` to `targets` of a raw amplitude vector of 2^num_qubits
/// entries, restricted to the subspace where controls match their values.
/// Performs shape and index validation only; no unitarity check.
void apply_block(ComplexVector &amps, int num_qubits, const ComplexMatrix &u,
                 const QubitIndexSet &targets, const QubitIndexSet &controls,
                 const std::vector<int> &control_values);

} // namespace kernels

} // namespace qaffine
