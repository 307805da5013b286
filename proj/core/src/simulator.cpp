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
#include "qaffine/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qaffine/error.hpp"

namespace qaffine {

namespace {

constexpr double kUnitaryTol = 1e-9;
constexpr double kInputNormTol = 1e-8;

int log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) {
    return -1;
  }
  int q = 0;
  while ((std::size_t{1} << q) < n) {
    ++q;
  }
  return q;
}

void check_capacity(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    std::ostringstream msg;
    msg << "register of " << num_qubits << " qubits outside [1, " << kMaxQubits
        << "]";
    fail(ErrorKind::Capacity, "qubit_capacity", msg.str());
  }
}

void check_indices(const QubitIndexSet &set, int num_qubits, const char *what) {
  for (int q : set) {
    if (q < 0 || q >= num_qubits) {
      std::ostringstream msg;
      msg << what << " qubit " << q << " outside register of " << num_qubits
          << " qubits";
      fail(ErrorKind::Index, "qubit_in_range", msg.str());
    }
  }
}

} // namespace

QubitIndexSet::QubitIndexSet(std::initializer_list<int> qubits)
    : QubitIndexSet(std::vector<int>(qubits)) {}

QubitIndexSet::QubitIndexSet(std::vector<int> qubits) : qubits_(std::move(qubits)) {
  std::vector<int> sorted = qubits_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorKind::Index, "distinct_qubits", "qubit index set has duplicates");
  }
  if (!sorted.empty() && sorted.front() < 0) {
    fail(ErrorKind::Index, "qubit_in_range", "negative qubit index");
  }
}

QubitIndexSet QubitIndexSet::range(int lo, int hi) {
  std::vector<int> qubits;
  for (int q = lo; q < hi; ++q) {
    qubits.push_back(q);
  }
  return QubitIndexSet(std::move(qubits));
}

bool QubitIndexSet::contains(int qubit) const noexcept {
  return std::find(qubits_.begin(), qubits_.end(), qubit) != qubits_.end();
}

QubitIndexSet QubitIndexSet::with(int qubit) const {
  std::vector<int> qubits = qubits_;
  qubits.push_back(qubit);
  return QubitIndexSet(std::move(qubits));
}

QuantumState QuantumState::basis(int num_qubits) {
  check_capacity(num_qubits);
  ComplexVector amps = ComplexVector::Zero(Eigen::Index{1} << num_qubits);
  amps(0) = 1.0;
  return QuantumState(num_qubits, std::move(amps));
}

QuantumState QuantumState::from_amplitudes(const ComplexVector &amplitudes) {
  const int q = log2_exact(static_cast<std::size_t>(amplitudes.size()));
  if (q < 1) {
    fail(ErrorKind::Shape, "power_of_two_dim",
         "amplitude vector length must be a power of two >= 2");
  }
  check_capacity(q);
  if (!all_finite(amplitudes)) {
    fail(ErrorKind::InvalidInput, "finite_entries", "non-finite amplitude");
  }
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kInputNormTol) {
    std::ostringstream msg;
    msg << "amplitude vector has norm " << norm << ", expected 1 within 1e-8";
    fail(ErrorKind::Normalization, "unit_norm", msg.str());
  }
  return QuantumState(q, amplitudes / norm);
}

QuantumState QuantumState::adopt(ComplexVector amps) {
  const int q = log2_exact(static_cast<std::size_t>(amps.size()));
  if (q < 1) {
    fail(ErrorKind::Shape, "power_of_two_dim",
         "amplitude vector length must be a power of two >= 2");
  }
  check_capacity(q);
  if (std::abs(amps.norm() - 1.0) > kNormTol) {
    fail(ErrorKind::Normalization, "unit_norm",
         "adopted amplitudes are not normalized within 1e-10");
  }
  return QuantumState(q, std::move(amps));
}

Complex QuantumState::amplitude(std::size_t index) const {
  if (index >= dim()) {
    fail(ErrorKind::Index, "basis_index_in_range", "basis index out of range");
  }
  return amps_(static_cast<Eigen::Index>(index));
}

void QuantumState::prepend_qubit() {
  check_capacity(num_qubits_ + 1);
  const Eigen::Index old_dim = amps_.size();
  amps_.conservativeResize(2 * old_dim);
  amps_.tail(old_dim).setZero();
  ++num_qubits_;
}

namespace kernels {

void apply_block(ComplexVector &amps, int num_qubits, const ComplexMatrix &u,
                 const QubitIndexSet &targets, const QubitIndexSet &controls,
                 const std::vector<int> &control_values) {
  if (targets.empty()) {
    fail(ErrorKind::Index, "non_empty_targets", "operation has no targets");
  }
  check_indices(targets, num_qubits, "target");
  check_indices(controls, num_qubits, "control");
  for (int c : controls) {
    if (targets.contains(c)) {
      fail(ErrorKind::Index, "controls_disjoint_from_targets",
           "control qubit overlaps target set");
    }
  }
  if (control_values.size() != controls.size()) {
    fail(ErrorKind::Shape, "control_values_match",
         "control value count differs from control count");
  }
  const std::size_t t = targets.size();
  const std::size_t local_dim = std::size_t{1} << t;
  if (static_cast<std::size_t>(u.rows()) != local_dim ||
      static_cast<std::size_t>(u.cols()) != local_dim) {
    std::ostringstream msg;
    msg << "matrix is " << u.rows() << "x" << u.cols() << " but " << t
        << " target qubits need " << local_dim << "x" << local_dim;
    fail(ErrorKind::Shape, "matrix_matches_targets", msg.str());
  }

  std::vector<std::uint64_t> offsets(local_dim, 0);
  for (std::size_t l = 0; l < local_dim; ++l) {
    for (std::size_t i = 0; i < t; ++i) {
      if ((l >> i) & 1U) {
        offsets[l] |= std::uint64_t{1} << targets[i];
      }
    }
  }
  std::vector<int> fixed(targets.begin(), targets.end());
  std::uint64_t control_mask = 0;
  for (std::size_t i = 0; i < controls.size(); ++i) {
    fixed.push_back(controls[i]);
    if (control_values[i] != 0 && control_values[i] != 1) {
      fail(ErrorKind::InvalidInput, "control_value_is_bit",
           "control values must be 0 or 1");
    }
    if (control_values[i] == 1) {
      control_mask |= std::uint64_t{1} << controls[i];
    }
  }
  std::sort(fixed.begin(), fixed.end());

  const int free_bits = num_qubits - static_cast<int>(fixed.size());
  const std::uint64_t outer = std::uint64_t{1} << free_bits;
  std::vector<Complex> in(local_dim);
  Complex *data = amps.data();
  for (std::uint64_t r = 0; r < outer; ++r) {
    std::uint64_t base = r;
    for (int p : fixed) {
      const std::uint64_t low = base & ((std::uint64_t{1} << p) - 1);
      base = ((base >> p) << (p + 1)) | low;
    }
    base |= control_mask;
    for (std::size_t l = 0; l < local_dim; ++l) {
      in[l] = data[base + offsets[l]];
    }
    for (std::size_t row = 0; row < local_dim; ++row) {
      Complex acc{0.0, 0.0};
      for (std::size_t col = 0; col < local_dim; ++col) {
        acc += u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) *
               in[col];
      }
      data[base + offsets[row]] = acc;
    }
  }
}

} // namespace kernels

QuantumState init_basis(int num_qubits) { return QuantumState::basis(num_qubits); }

QuantumState init_amplitudes(const ComplexVector &x) {
  return QuantumState::from_amplitudes(x);
}

QuantumState apply_unitary(QuantumState state, const ComplexMatrix &u,
                           const QubitIndexSet &targets) {
  return apply_controlled(std::move(state), u, targets, {}, {});
}

QuantumState apply_controlled(QuantumState state, const ComplexMatrix &u,
                              const QubitIndexSet &targets,
                              const QubitIndexSet &controls,
                              const std::vector<int> &control_values) {
  if (u.rows() != u.cols()) {
    fail(ErrorKind::Shape, "matrix_matches_targets", "matrix is not square");
  }
  if (!is_unitary(u, kUnitaryTol)) {
    fail(ErrorKind::Unitarity, "unitary",
         "matrix is not unitary within 1e-9");
  }
  kernels::apply_block(state.mutable_amplitudes(), state.num_qubits(), u, targets,
                       controls, control_values);
  return state;
}

QuantumState apply_operation(QuantumState state, const Operation &op) {
  return apply_controlled(std::move(state), op.matrix, op.targets, op.controls,
                          op.control_values);
}

void Circuit::set_num_qubits(int num_qubits) {
  if (num_qubits < num_qubits_) {
    fail(ErrorKind::Index, "qubit_in_range", "circuit register cannot shrink");
  }
  num_qubits_ = num_qubits;
}

void Circuit::append(Operation op) {
  check_indices(op.targets, num_qubits_, "target");
  check_indices(op.controls, num_qubits_, "control");
  ops_.push_back(std::move(op));
}

void Circuit::append(const Circuit &other) {
  if (other.num_qubits_ > num_qubits_) {
    fail(ErrorKind::Index, "qubit_in_range",
         "appended circuit is wider than the receiver");
  }
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
}

Circuit Circuit::adjoint() const {
  Circuit out(num_qubits_);
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    Operation op = *it;
    op.matrix = it->matrix.adjoint();
    if (!op.label.empty()) {
      op.label += "^dg";
    }
    out.ops_.push_back(std::move(op));
  }
  return out;
}

Circuit Circuit::controlled(int control, int value) const {
  Circuit out(std::max(num_qubits_, control + 1));
  for (const Operation &op : ops_) {
    Operation c = op;
    c.controls = op.controls.with(control);
    c.control_values.push_back(value);
    if (op.targets.contains(control)) {
      fail(ErrorKind::Index, "controls_disjoint_from_targets",
           "added control overlaps an operation target");
    }
    out.ops_.push_back(std::move(c));
  }
  return out;
}

ComplexMatrix Circuit::to_matrix() const {
  if (num_qubits_ < 1 || num_qubits_ > 12) {
    fail(ErrorKind::Capacity, "dense_matrix_capacity",
         "dense circuit matrix limited to 12 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    ComplexVector column = out.col(col);
    for (const Operation &op : ops_) {
      kernels::apply_block(column, num_qubits_, op.matrix, op.targets, op.controls,
                           op.control_values);
    }
    out.col(col) = column;
  }
  return out;
}

QuantumState run_circuit(const Circuit &circuit, QuantumState state) {
  if (state.num_qubits() != circuit.num_qubits()) {
    fail(ErrorKind::Shape, "register_width",
         "circuit and state have different qubit counts");
  }
  for (const Operation &op : circuit.operations()) {
    state = apply_operation(std::move(state), op);
  }
  return state;
}

QuantumState run_circuit(const Circuit &circuit) {
  return run_circuit(circuit, init_basis(circuit.num_qubits()));
}

ComplexVector get_amplitudes(const QuantumState &state,
                             const std::vector<std::uint64_t> &indices) {
  ComplexVector out(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = state.amplitude(indices[i]);
  }
  return out;
}

ShotHistogram sample(const QuantumState &state, std::uint64_t shots,
                     std::uint64_t seed) {
  if (shots == 0) {
    fail(ErrorKind::InvalidInput, "positive_shots", "shots must be >= 1");
  }
  const ComplexVector &amps = state.amplitudes();
  std::vector<double> cumulative(static_cast<std::size_t>(amps.size()));
  double total = 0.0;
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    total += std::norm(amps(i));
    cumulative[static_cast<std::size_t>(i)] = total;
  }
  std::mt19937_64 rng(seed);
  ShotHistogram hist;
  hist.shots = shots;
  constexpr double kInv53 = 1.0 / 9007199254740992.0; // 2^-53
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * kInv53 * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
      // u rounded up to the total; take the last index with nonzero weight.
      it = std::lower_bound(cumulative.begin(), cumulative.end(), total);
    }
    auto index = static_cast<std::uint64_t>(it - cumulative.begin());
    ++hist.counts[index];
  }
  return hist;
}

} // namespace qaffine
