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
#include "qaffine/synthesis.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "qaffine/baseline.hpp"
#include "qaffine/error.hpp"
#include "qaffine/pipeline.hpp"

namespace qaffine {

namespace {

constexpr double kSynthUnitaryTol = 1e-9;
constexpr int kMaxSynthQubits = 5;
constexpr double kAgreementTol = 1e-8;

Eigen::Matrix2cd ry(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

Eigen::Matrix2cd rz(double angle) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::polar(1.0, -angle / 2);
  m(1, 1) = std::polar(1.0, angle / 2);
  return m;
}

enum class Axis { Y, Z };

/// Rotation on `target` by angles[j], where bit i of j is the value of
/// controls[i].
void uniformly_controlled_rotation(Axis axis, int target,
                                   const std::vector<int> &controls,
                                   const std::vector<double> &angles,
                                   GateList &out) {
  if (controls.empty()) {
    out.add_single(axis == Axis::Y ? ry(angles[0]) : rz(angles[0]), target);
    return;
  }
  const std::size_t half = angles.size() / 2;
  std::vector<double> plus(half);
  std::vector<double> minus(half);
  for (std::size_t j = 0; j < half; ++j) {
    plus[j] = 0.5 * (angles[j] + angles[j + half]);
    minus[j] = 0.5 * (angles[j] - angles[j + half]);
  }
  const std::vector<int> rest(controls.begin(), controls.end() - 1);
  const int top = controls.back();
  // X R(t) X = R(-t) for both axes.
  uniformly_controlled_rotation(axis, target, rest, plus, out);
  out.add_cnot(top, target);
  uniformly_controlled_rotation(axis, target, rest, minus, out);
  out.add_cnot(top, target);
}

struct CosineSine {
  ComplexMatrix l0, l1, r0, r1;
  Eigen::VectorXd theta;
};

/// u = diag(l0, l1) [[C, -S], [S, C]] diag(r0, r1), C = cos(theta).
CosineSine cosine_sine(const ComplexMatrix &u) {
  const lapack_int m = static_cast<lapack_int>(u.rows());
  const lapack_int p = m / 2;
  ComplexMatrix x11 = u.topLeftCorner(p, p);
  ComplexMatrix x12 = u.topRightCorner(p, p);
  ComplexMatrix x21 = u.bottomLeftCorner(p, p);
  ComplexMatrix x22 = u.bottomRightCorner(p, p);
  CosineSine cs;
  cs.theta.resize(p);
  cs.l0.resize(p, p);
  cs.l1.resize(p, p);
  cs.r0.resize(p, p);
  cs.r1.resize(p, p);
  const lapack_int info = LAPACKE_zuncsd(
      LAPACK_COL_MAJOR, 'Y', 'Y', 'Y', 'Y', 'N', 'D', m, p, p, x11.data(), p,
      x12.data(), p, x21.data(), p, x22.data(), p, cs.theta.data(), cs.l0.data(),
      p, cs.l1.data(), p, cs.r0.data(), p, cs.r1.data(), p);
  if (info != 0) {
    std::ostringstream msg;
    msg << "cosine-sine decomposition failed (zuncsd info " << info << ")";
    fail(ErrorKind::InvalidInput, "csd_converged", msg.str());
  }
  return cs;
}

void synthesize_into(const ComplexMatrix &u, const std::vector<int> &qubits,
                     GateList &out);

/// diag(v0, v1) on (lower qubits, top) as V, uniformly controlled Rz, W.
void demultiplex(const ComplexMatrix &v0, const ComplexMatrix &v1,
                 const std::vector<int> &qubits, GateList &out) {
  const std::vector<int> lower(qubits.begin(), qubits.end() - 1);
  const int top = qubits.back();
  // v0 v1^dg = V D^2 V^dg; Schur of a normal matrix is diagonal.
  Eigen::ComplexSchur<ComplexMatrix> schur(v0 * v1.adjoint());
  const ComplexMatrix &basis = schur.matrixU();
  const Eigen::Index dim = v0.rows();
  ComplexVector d(dim);
  std::vector<double> angles(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double phase = std::arg(schur.matrixT()(i, i)) / 2;
    d(i) = std::polar(1.0, phase);
    // diag(d, conj d) on the top qubit is Rz(-2 phase).
    angles[static_cast<std::size_t>(i)] = -2.0 * phase;
  }
  const ComplexMatrix w = d.asDiagonal() * basis.adjoint() * v1;
  synthesize_into(w, lower, out);
  uniformly_controlled_rotation(Axis::Z, top, lower, angles, out);
  synthesize_into(basis, lower, out);
}

void synthesize_into(const ComplexMatrix &u, const std::vector<int> &qubits,
                     GateList &out) {
  if (qubits.size() == 1) {
    out.add_single(u, qubits[0]);
    return;
  }
  const CosineSine cs = cosine_sine(u);
  const std::vector<int> lower(qubits.begin(), qubits.end() - 1);
  std::vector<double> angles(static_cast<std::size_t>(cs.theta.size()));
  for (Eigen::Index i = 0; i < cs.theta.size(); ++i) {
    angles[static_cast<std::size_t>(i)] = 2.0 * cs.theta(i);
  }
  demultiplex(cs.r0, cs.r1, qubits, out);
  uniformly_controlled_rotation(Axis::Y, qubits.back(), lower, angles, out);
  demultiplex(cs.l0, cs.l1, qubits, out);
}

/// Full matrix of `op` on local qubits (targets..., controls...).
ComplexMatrix embed_controlled(const Operation &op) {
  const std::size_t t = op.targets.size();
  const std::size_t c = op.controls.size();
  const Eigen::Index local = Eigen::Index{1} << t;
  const Eigen::Index dim = Eigen::Index{1} << (t + c);
  std::uint64_t pattern = 0;
  for (std::size_t i = 0; i < c; ++i) {
    if (op.control_values[i] != 0) {
      pattern |= std::uint64_t{1} << i;
    }
  }
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  const auto offset = static_cast<Eigen::Index>(pattern) * local;
  m.block(offset, offset, local, local) = op.matrix;
  return m;
}

bool is_pauli_x(const ComplexMatrix &m) {
  return m.rows() == 2 && std::abs(m(0, 0)) < 1e-15 && std::abs(m(1, 1)) < 1e-15 &&
         std::abs(m(0, 1) - 1.0) < 1e-15 && std::abs(m(1, 0) - 1.0) < 1e-15;
}

} // namespace

void GateList::add_single(const Eigen::Matrix2cd &m, int target) {
  if (target < 0 || target >= qubit_count_) {
    fail(ErrorKind::Index, "qubit_in_range", "gate target out of range");
  }
  if (!is_unitary(m, 1e-10)) {
    fail(ErrorKind::Unitarity, "unitary", "single-qubit gate is not unitary");
  }
  gates_.push_back(Gate{Gate::Kind::SingleQubit, m, target, -1});
}

void GateList::add_cnot(int control, int target) {
  if (control < 0 || control >= qubit_count_ || target < 0 ||
      target >= qubit_count_ || control == target) {
    fail(ErrorKind::Index, "qubit_in_range", "invalid CNOT qubits");
  }
  gates_.push_back(Gate{Gate::Kind::Cnot, Eigen::Matrix2cd::Identity(), target, control});
}

void GateList::append(const GateList &other) {
  if (other.qubit_count_ > qubit_count_) {
    fail(ErrorKind::Index, "qubit_in_range", "appended gate list is wider");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

QuantumState GateList::run(QuantumState state) const {
  if (state.num_qubits() != qubit_count_) {
    fail(ErrorKind::Shape, "register_width", "gate list width differs from state");
  }
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  for (const Gate &g : gates_) {
    if (g.kind == Gate::Kind::SingleQubit) {
      state = apply_unitary(std::move(state), g.matrix, {g.target});
    } else {
      state = apply_controlled(std::move(state), x, {g.target}, {g.control}, {1});
    }
  }
  return state;
}

ComplexMatrix GateList::to_matrix() const {
  if (qubit_count_ < 1 || qubit_count_ > 12) {
    fail(ErrorKind::Capacity, "dense_matrix_capacity",
         "dense gate-list matrix limited to 12 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << qubit_count_;
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    ComplexVector v = out.col(col);
    for (const Gate &g : gates_) {
      if (g.kind == Gate::Kind::SingleQubit) {
        kernels::apply_block(v, qubit_count_, g.matrix, {g.target}, {}, {});
      } else {
        kernels::apply_block(v, qubit_count_, x, {g.target}, {g.control}, {1});
      }
    }
    out.col(col) = v;
  }
  return out;
}

GateList synthesize(const ComplexMatrix &u, int qubits) {
  if (qubits < 1 || qubits > kMaxSynthQubits) {
    fail(ErrorKind::Capacity, "synthesis_capacity",
         "synthesize supports 1 to 5 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  if (u.rows() != dim || u.cols() != dim) {
    fail(ErrorKind::Shape, "matrix_matches_targets",
         "synthesize: matrix size differs from 2^qubits");
  }
  if (!is_unitary(u, kSynthUnitaryTol)) {
    fail(ErrorKind::Unitarity, "unitary", "synthesize: matrix is not unitary");
  }
  std::vector<int> order;
  for (int q = 0; q < qubits; ++q) {
    order.push_back(q);
  }
  GateList raw(qubits);
  synthesize_into(u, order, raw);
  return fuse_single_qubit_gates(raw);
}

GateList fuse_single_qubit_gates(const GateList &gates) {
  GateList out(gates.qubit_count());
  // Position in `merged` of the trailing single-qubit gate per qubit, or -1.
  std::vector<Gate> merged;
  std::vector<long> pending(static_cast<std::size_t>(gates.qubit_count()), -1);
  for (const Gate &g : gates.gates()) {
    if (g.kind == Gate::Kind::SingleQubit) {
      long &slot = pending[static_cast<std::size_t>(g.target)];
      if (slot >= 0) {
        Gate &prev = merged[static_cast<std::size_t>(slot)];
        prev.matrix = g.matrix * prev.matrix;
      } else {
        slot = static_cast<long>(merged.size());
        merged.push_back(g);
      }
    } else {
      pending[static_cast<std::size_t>(g.control)] = -1;
      pending[static_cast<std::size_t>(g.target)] = -1;
      merged.push_back(g);
    }
  }
  for (const Gate &g : merged) {
    if (g.kind == Gate::Kind::Cnot) {
      out.add_cnot(g.control, g.target);
    } else if ((g.matrix - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-14) {
      out.add_single(g.matrix, g.target);
    }
  }
  return out;
}

GateList lower_circuit(const Circuit &circuit) {
  GateList out(circuit.num_qubits());
  for (const Operation &op : circuit.operations()) {
    if (op.controls.empty() && op.targets.size() == 1) {
      out.add_single(op.matrix, op.targets[0]);
      continue;
    }
    if (op.controls.size() == 1 && op.targets.size() == 1 &&
        op.control_values[0] == 1 && is_pauli_x(op.matrix)) {
      out.add_cnot(op.controls[0], op.targets[0]);
      continue;
    }
    std::vector<int> local_to_global(op.targets.begin(), op.targets.end());
    local_to_global.insert(local_to_global.end(), op.controls.begin(),
                           op.controls.end());
    const int width = static_cast<int>(local_to_global.size());
    const GateList local = synthesize(embed_controlled(op), width);
    for (const Gate &g : local.gates()) {
      const int target = local_to_global[static_cast<std::size_t>(g.target)];
      if (g.kind == Gate::Kind::SingleQubit) {
        out.add_single(g.matrix, target);
      } else {
        out.add_cnot(local_to_global[static_cast<std::size_t>(g.control)], target);
      }
    }
  }
  return fuse_single_qubit_gates(out);
}

GateCountReport count_gates(const GateList &gates) {
  GateCountReport report;
  for (const Gate &g : gates.gates()) {
    if (g.kind == Gate::Kind::SingleQubit) {
      ++report.single_qubit;
    } else {
      ++report.multi_qubit;
    }
  }
  report.total = report.single_qubit + report.multi_qubit;
  return report;
}

MethodComparison compare_methods(const ComplexMatrix &a, const ComplexVector &b,
                                 const ComplexVector &psi) {
  if (a.rows() != 4 || a.cols() != 4 || b.size() != 4 || psi.size() != 4) {
    fail(ErrorKind::Shape, "four_by_four",
         "compare_methods expects a 4x4 A with B and psi of length 4");
  }
  MethodComparison cmp;
  cmp.note = "multi_qubit counts CNOTs after cosine-sine (Shannon) synthesis; "
             "totals depend on the decomposition toolchain";

  AffineSequence seq{2, psi, {AffineStep::translate(a, b)}};
  const PipelineResult ours = run_pipeline(seq, AddSubMode::Physical);
  const GateList ours_gates = lower_circuit(ours.circuit);
  cmp.ours = count_gates(ours_gates);
  cmp.ours_reconstruction_error =
      max_abs_diff_up_to_phase(ours_gates.to_matrix(), ours.circuit.to_matrix());
  const QuantumState ours_state = ours_gates.run(init_basis(ours_gates.qubit_count()));
  cmp.ours_result = 2.0 * ours_state.amplitudes().head(4);

  const AugmentedAffine aug = build_augmented(a, b, psi);
  Circuit aug_circuit(4);
  aug_circuit.append(Operation{state_preparation(aug.psi_tilde),
                               QubitIndexSet::range(0, 3), {}, {}, "prep(psi~)"});
  aug_circuit.append(Operation{aug.enc.unitary, QubitIndexSet::range(0, 4), {}, {},
                               "U(A~)"});
  const GateList aug_gates = lower_circuit(aug_circuit);
  cmp.augmented = count_gates(aug_gates);
  cmp.augmented_reconstruction_error =
      max_abs_diff_up_to_phase(aug_gates.to_matrix(), aug_circuit.to_matrix());
  const QuantumState aug_state = aug_gates.run(init_basis(4));
  cmp.augmented_result = std::sqrt(2.0) * aug.enc.alpha * aug_state.amplitudes().head(4);

  cmp.classical_result = classical_affine_compose(seq);
  cmp.agreement = max_abs_diff(cmp.ours_result, cmp.augmented_result);
  if (cmp.agreement > kAgreementTol) {
    std::ostringstream msg;
    msg << "synthesized circuits disagree by " << cmp.agreement;
    fail(ErrorKind::Precondition, "methods_agree", msg.str());
  }
  return cmp;
}

} // namespace qaffine
