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
 * Demonstrations built on the affine pipeline: signed portfolio-return
 * amplitudes and frequency-domain signal filtering.
 */
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qaffine/simulator.hpp"

namespace qaffine {

// --- Quantum Fourier transform ---------------------------------------------

/// Circuit of Hadamards, controlled phases and final swaps whose action on
/// the target register is y_k = M^{-1/2} sum_j e^{+2 pi i jk/M} x_j in natural
/// index order (targets[i] is bit i). The inverse uses the conjugate kernel.
Circuit qft_circuit(int num_qubits, const QubitIndexSet &targets, bool inverse);

QuantumState qft(QuantumState state, const QubitIndexSet &targets, bool inverse);

/// Unitary DFT with the classical sign convention:
/// forward X_k = M^{-1/2} sum_j x_j e^{-2 pi i jk/M}, inverse with e^{+...}.
/// Direct O(M^2) evaluation.
ComplexVector unitary_dft(const ComplexVector &x, bool inverse);

// --- Portfolio -------------------------------------------------------------

/// Asset list of length 2^m split into psi = assets[0..2), B_1 = [2..4),
/// and B_r = the next 2^r assets for r >= 2. Each block must be unit norm.
class PortfolioSpec {
public:
  explicit PortfolioSpec(std::vector<double> assets);

  int m() const noexcept { return m_; }
  const std::vector<double> &assets() const noexcept { return assets_; }
  /// True when a_i >= a_{i+1} for every i.
  bool is_sorted_descending() const;

  ComplexVector psi() const;
  /// Block B_r, 1 <= r <= m-1, of length 2^r.
  ComplexVector group(int r) const;

private:
  std::vector<double> assets_;
  int m_ = 0;
};

/// bits[r] is qubit r: bits[0] indexes psi, bits[r] (r >= 1) is the add/sub
/// ancilla of stage r, 1 selecting the difference branch.
std::uint64_t bits_to_index(const std::vector<int> &bits);
std::vector<int> index_to_bits(std::uint64_t index, int m);

/// m-1 add/sub stages (no dilation, every A is the identity) starting from
/// the one-qubit state psi.
QuantumState portfolio_circuit(const PortfolioSpec &spec);

/// psi[bit0] / 2^(m-1) + sum_r (-1)^{bit r} B_r[index mod 2^r] / 2^(m-r):
/// the literal output amplitude of iterated (phi +- b)/2.
double portfolio_closed_form(const PortfolioSpec &spec, const std::vector<int> &bits);

/// F(i_0, ..., i_{m-1}) / 2^(m-1) with unit weight on every asset group, where
/// i_0 = bits[0] and i_r = bits[r]. Agrees with the circuit (up to sign and
/// ordering) only for m = 2.
double portfolio_group_sum(const PortfolioSpec &spec, const std::vector<int> &bits);

/// Empirical frequency per basis index from `shots` measurements.
std::map<std::uint64_t, double> portfolio_estimate(const PortfolioSpec &spec,
                                                   std::uint64_t shots,
                                                   std::uint64_t seed);

// --- Signal filtering --------------------------------------------------------

struct SignalSpec {
  std::vector<double> samples;
  /// |a| <= 1.
  double scale_a = 1.0;
  /// |b| <= 1; weight of the frequency-domain bias vector.
  double bias_b = 0.0;
  /// Unit-norm bias in classical DFT index order; empty means uniform.
  ComplexVector bias_vector;
};

struct SignalResult {
  std::vector<double> t;
  ComplexVector quantum_out;
  ComplexVector classical_out;
};

/// Quantum path: encode x/||x||, QFT, one affine step (a I, b v), inverse QFT
/// on the data register, de-scale by 2 and ||x||. Classical path: DFT,
/// a X + b v, inverse DFT on the same normalized data, times ||x||.
SignalResult signal_filter(const SignalSpec &spec);

/// x_n = a1 sin(2 pi f1 t_n) + a2 sin(2 pi f2 t_n), t_n = n / length.
std::vector<double> two_tone_signal(std::size_t length, double f1, double a1,
                                    double f2, double a2);

} // namespace qaffine
