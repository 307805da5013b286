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
 * Sequential affine transformations A_k(...(A_1 psi + B_1)...) + B_k on the
 * amplitudes of an n-qubit register.
 *
 * Register layout: the data register occupies qubits 0..n-1. Step j adds two
 * qubits on top: the dilation ancilla of A_j at n + 2(j-1), then the add/sub
 * ancilla at n + 2(j-1) + 1. The composed result, scaled by 1/2^k, sits in
 * the all-ancillas-zero block, i.e. global indices 0..N-1.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "qaffine/addsub.hpp"
#include "qaffine/simulator.hpp"

namespace qaffine {

/// Contraction slack accepted on sigma_max(A_j).
inline constexpr double kContractionTol = 1e-10;

enum class TranslationKind {
  /// ||B|| = 1 within 1e-8.
  Normalized,
  /// B = 0. The add/sub stage then only contributes the factor 1/2.
  Zero,
  /// 0 < ||B|| <= 1; the missing weight goes to the garbage index.
  Partial,
};

struct AffineStep {
  ComplexMatrix a;
  ComplexVector b;
  TranslationKind kind = TranslationKind::Normalized;

  static AffineStep translate(ComplexMatrix a, ComplexVector b);
  static AffineStep linear(ComplexMatrix a);
  static AffineStep partial(ComplexMatrix a, ComplexVector b);

  /// The translation as a plain vector (zeros for the zero marker).
  ComplexVector translation() const;
};

struct AffineSequence {
  int n = 0;
  ComplexVector psi;
  std::vector<AffineStep> steps;

  std::size_t dim() const noexcept { return std::size_t{1} << n; }
  int k() const noexcept { return static_cast<int>(steps.size()); }
};

/// Checks shapes and norms. With `require_contraction`, also rejects any
/// sigma_max(A_j) > 1 + 1e-10 (ErrorKind::Contraction).
void validate(const AffineSequence &seq, bool require_contraction);

struct RescaledTranslation {
  ComplexVector b_tilde;
  int step_index = 0;
  std::uint64_t garbage_index = 0;
};

/// Zero-pads `b` to `target_dim`, divides it by 2^(j-1) and places the
/// residual sqrt(1 - ||b||^2 / 4^(j-1)) at the last index, which is never
/// part of a measured or branch-tracked block. A zero `b` yields the pure
/// garbage basis vector.
RescaledTranslation rescale_translation(const ComplexVector &b, int j,
                                        std::uint64_t target_dim);

struct PipelineResult {
  QuantumState state;
  int n = 0;
  int k = 0;
  /// Exactly 2^k.
  std::uint64_t scale = 1;
  std::vector<std::uint64_t> result_indices;
  /// Block-level circuit from |0...0> (physical mode only).
  Circuit circuit;

  /// Global indices of branch (b_1, ..., b_k): add/sub ancilla j set to b_j,
  /// every dilation ancilla zero, data index 0..N-1.
  std::vector<std::uint64_t> branch_indices(const std::vector<int> &bits) const;
};

PipelineResult run_pipeline(const AffineSequence &seq,
                            AddSubMode mode = AddSubMode::Abstract);

/// scale * amplitudes at result_indices.
ComplexVector extract_result(const PipelineResult &res);

/// Direct evaluation of A_k(...(A_1 psi + B_1)...) + B_k.
ComplexVector classical_affine_compose(const AffineSequence &seq);

} // namespace qaffine
