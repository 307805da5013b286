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
#include "qaffine/pipeline.hpp"

#include <cmath>
#include <sstream>

#include "qaffine/blockenc.hpp"
#include "qaffine/error.hpp"

namespace qaffine {

namespace {

constexpr double kTranslationNormTol = 1e-8;

std::string step_name(std::size_t j) {
  std::ostringstream out;
  out << "step " << (j + 1);
  return out.str();
}

} // namespace

AffineStep AffineStep::translate(ComplexMatrix a, ComplexVector b) {
  return AffineStep{std::move(a), std::move(b), TranslationKind::Normalized};
}

AffineStep AffineStep::linear(ComplexMatrix a) {
  const Eigen::Index n = a.rows();
  return AffineStep{std::move(a), ComplexVector::Zero(n), TranslationKind::Zero};
}

AffineStep AffineStep::partial(ComplexMatrix a, ComplexVector b) {
  return AffineStep{std::move(a), std::move(b), TranslationKind::Partial};
}

ComplexVector AffineStep::translation() const {
  if (kind == TranslationKind::Zero) {
    return ComplexVector::Zero(a.rows());
  }
  return b;
}

void validate(const AffineSequence &seq, bool require_contraction) {
  if (seq.n < 1) {
    fail(ErrorKind::Shape, "base_qubits", "n must be >= 1");
  }
  if (seq.n > kMaxQubits) {
    fail(ErrorKind::Capacity, "qubit_capacity", "n exceeds the 24-qubit cap");
  }
  const auto dim = static_cast<Eigen::Index>(seq.dim());
  if (seq.psi.size() != dim) {
    fail(ErrorKind::Shape, "psi_dim", "psi length must be 2^n");
  }
  if (!all_finite(seq.psi) || std::abs(seq.psi.norm() - 1.0) > 1e-8) {
    fail(ErrorKind::Normalization, "psi_unit_norm",
         "psi must be finite with unit norm within 1e-8");
  }
  if (seq.steps.empty()) {
    fail(ErrorKind::Shape, "non_empty_steps", "sequence needs at least one step");
  }
  for (std::size_t j = 0; j < seq.steps.size(); ++j) {
    const AffineStep &step = seq.steps[j];
    if (step.a.rows() != dim || step.a.cols() != dim) {
      fail(ErrorKind::Shape, "step_matrix_dim",
           step_name(j) + ": A must be N x N with N = 2^n");
    }
    if (!all_finite(step.a)) {
      fail(ErrorKind::InvalidInput, "finite_entries",
           step_name(j) + ": A has non-finite entries");
    }
    if (step.kind != TranslationKind::Zero) {
      if (step.b.size() != dim) {
        fail(ErrorKind::Shape, "step_translation_dim",
             step_name(j) + ": B must have length N");
      }
      if (!all_finite(step.b)) {
        fail(ErrorKind::InvalidInput, "finite_entries",
             step_name(j) + ": B has non-finite entries");
      }
      const double norm = step.b.norm();
      const bool ok = step.kind == TranslationKind::Normalized
                          ? std::abs(norm - 1.0) <= kTranslationNormTol
                          : norm <= 1.0 + kTranslationNormTol;
      if (!ok) {
        std::ostringstream msg;
        msg << step_name(j) << ": translation norm " << norm
            << (step.kind == TranslationKind::Normalized ? " is not 1"
                                                         : " exceeds 1");
        fail(ErrorKind::Normalization, "translation_unit_norm", msg.str());
      }
    }
    if (require_contraction) {
      const double sigma = spectral_norm(step.a);
      if (sigma > 1.0 + kContractionTol) {
        std::ostringstream msg;
        msg << step_name(j) << ": sigma_max(A) = " << sigma
            << " > 1; pre-scale A so it is a contraction";
        fail(ErrorKind::Contraction, "contraction", msg.str());
      }
    }
  }
}

RescaledTranslation rescale_translation(const ComplexVector &b, int j,
                                        std::uint64_t target_dim) {
  if (j < 1) {
    fail(ErrorKind::InvalidInput, "step_index", "step index starts at 1");
  }
  const auto n = static_cast<std::uint64_t>(b.size());
  if (target_dim < 2 * n || (target_dim & (target_dim - 1)) != 0) {
    fail(ErrorKind::Shape, "translation_target_dim",
         "target dimension must be a power of two >= 2 dim(B)");
  }
  const double shrink = std::ldexp(1.0, -(j - 1));
  const double kept = b.squaredNorm() * shrink * shrink;
  const double residual_sq = 1.0 - kept;
  if (residual_sq < -2.0 * kTranslationNormTol) {
    fail(ErrorKind::Normalization, "translation_unit_norm",
         "rescaled translation exceeds unit norm");
  }
  RescaledTranslation out;
  out.step_index = j;
  out.garbage_index = target_dim - 1;
  out.b_tilde = ComplexVector::Zero(static_cast<Eigen::Index>(target_dim));
  out.b_tilde.head(b.size()) = shrink * b;
  out.b_tilde(static_cast<Eigen::Index>(out.garbage_index)) =
      std::sqrt(std::max(residual_sq, 0.0));
  // Absorb the <= 1e-8 slack allowed on ||B||.
  out.b_tilde /= out.b_tilde.norm();
  return out;
}

std::vector<std::uint64_t>
PipelineResult::branch_indices(const std::vector<int> &bits) const {
  if (static_cast<int>(bits.size()) != k) {
    fail(ErrorKind::Shape, "branch_bits", "branch needs one bit per step");
  }
  std::uint64_t offset = 0;
  for (int j = 0; j < k; ++j) {
    if (bits[static_cast<std::size_t>(j)] != 0) {
      offset |= std::uint64_t{1} << (n + 2 * j + 1);
    }
  }
  std::vector<std::uint64_t> out;
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < dim; ++i) {
    out.push_back(offset + i);
  }
  return out;
}

PipelineResult run_pipeline(const AffineSequence &seq, AddSubMode mode) {
  validate(seq, true);
  const int n = seq.n;
  const int k = seq.k();
  if (n + 2 * k > kMaxQubits) {
    std::ostringstream msg;
    msg << "n + 2k = " << (n + 2 * k) << " exceeds the " << kMaxQubits
        << "-qubit cap";
    fail(ErrorKind::Capacity, "qubit_capacity", msg.str());
  }
  const bool physical = mode == AddSubMode::Physical;
  const auto data = QubitIndexSet::range(0, n);

  QuantumState state = init_amplitudes(seq.psi);
  Circuit circuit(n);
  if (physical) {
    circuit.append(Operation{state_preparation(seq.psi), data, {}, {}, "prep(psi)"});
  }

  for (int j = 1; j <= k; ++j) {
    const AffineStep &step = seq.steps[static_cast<std::size_t>(j - 1)];
    const int dilation_ancilla = n + 2 * (j - 1);

    const BlockEncoding enc = block_encode(step.a);
    const QubitIndexSet targets = data.with(dilation_ancilla);
    state.prepend_qubit();
    state = encoded_apply(std::move(state), enc, targets);
    if (physical) {
      circuit.set_num_qubits(dilation_ancilla + 1);
      std::ostringstream label;
      label << "U" << j;
      circuit.append(Operation{enc.unitary, targets, {}, {}, label.str()});
    }

    const RescaledTranslation bt = rescale_translation(
        step.translation(), j, std::uint64_t{1} << (dilation_ancilla + 1));
    if (physical) {
      state = hadamard_addsub_inplace(std::move(state), bt.b_tilde,
                                      AddSubMode::Physical, &circuit);
      Circuit stage = addsub_stage_circuit(circuit, bt.b_tilde);
      circuit.set_num_qubits(stage.num_qubits());
      circuit.append(stage);
    } else {
      state = hadamard_addsub_inplace(std::move(state), bt.b_tilde,
                                      AddSubMode::Abstract);
    }
  }

  PipelineResult res{std::move(state), n, k, std::uint64_t{1} << k, {}, Circuit()};
  for (std::uint64_t i = 0; i < seq.dim(); ++i) {
    res.result_indices.push_back(i);
  }
  if (physical) {
    res.circuit = std::move(circuit);
  }
  return res;
}

ComplexVector extract_result(const PipelineResult &res) {
  return static_cast<double>(res.scale) * get_amplitudes(res.state, res.result_indices);
}

ComplexVector classical_affine_compose(const AffineSequence &seq) {
  validate(seq, false);
  ComplexVector x = seq.psi;
  for (const AffineStep &step : seq.steps) {
    x = step.a * x + step.translation();
  }
  return x;
}

} // namespace qaffine
