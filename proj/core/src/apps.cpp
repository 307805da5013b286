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
#include "qaffine/apps.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qaffine/addsub.hpp"
#include "qaffine/error.hpp"
#include "qaffine/pipeline.hpp"

namespace qaffine {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxPortfolioGroups = 10;

ComplexMatrix phase_gate(double angle) {
  ComplexMatrix p = ComplexMatrix::Identity(2, 2);
  p(1, 1) = std::polar(1.0, angle);
  return p;
}

ComplexMatrix swap_gate() {
  ComplexMatrix s = ComplexMatrix::Zero(4, 4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

int log2_length(std::size_t n, const char *what) {
  if (n < 2 || (n & (n - 1)) != 0) {
    fail(ErrorKind::Shape, "power_of_two_dim",
         std::string(what) + " length must be a power of two >= 2");
  }
  int q = 0;
  while ((std::size_t{1} << q) < n) {
    ++q;
  }
  return q;
}

} // namespace

Circuit qft_circuit(int num_qubits, const QubitIndexSet &targets, bool inverse) {
  if (targets.empty()) {
    fail(ErrorKind::Index, "non_empty_targets", "qft needs at least one target");
  }
  const int t = static_cast<int>(targets.size());
  Circuit c(num_qubits);
  for (int i = t - 1; i >= 0; --i) {
    c.append(Operation{hadamard(), {targets[static_cast<std::size_t>(i)]}, {}, {}, "H"});
    for (int j = i - 1; j >= 0; --j) {
      const double angle = kPi / static_cast<double>(std::uint64_t{1} << (i - j));
      c.append(Operation{phase_gate(angle), {targets[static_cast<std::size_t>(i)]},
                         {targets[static_cast<std::size_t>(j)]}, {1}, "CP"});
    }
  }
  for (int i = 0; i < t / 2; ++i) {
    c.append(Operation{swap_gate(),
                       {targets[static_cast<std::size_t>(i)],
                        targets[static_cast<std::size_t>(t - 1 - i)]},
                       {}, {}, "SWAP"});
  }
  return inverse ? c.adjoint() : c;
}

QuantumState qft(QuantumState state, const QubitIndexSet &targets, bool inverse) {
  const Circuit c = qft_circuit(state.num_qubits(), targets, inverse);
  return run_circuit(c, std::move(state));
}

ComplexVector unitary_dft(const ComplexVector &x, bool inverse) {
  const Eigen::Index m = x.size();
  const double sign = inverse ? 1.0 : -1.0;
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  ComplexVector out = ComplexVector::Zero(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    Complex acc{0.0, 0.0};
    for (Eigen::Index j = 0; j < m; ++j) {
      // Reduce jk mod m before scaling to keep the angle small.
      const auto r = static_cast<double>((j * k) % m);
      acc += x(j) * std::polar(1.0, sign * 2.0 * kPi * r / static_cast<double>(m));
    }
    out(k) = norm * acc;
  }
  return out;
}

PortfolioSpec::PortfolioSpec(std::vector<double> assets) : assets_(std::move(assets)) {
  m_ = log2_length(assets_.size(), "portfolio");
  if (m_ > kMaxPortfolioGroups) {
    fail(ErrorKind::Capacity, "portfolio_capacity", "portfolio limited to m <= 10");
  }
  for (double a : assets_) {
    if (!std::isfinite(a)) {
      fail(ErrorKind::InvalidInput, "finite_entries", "non-finite asset value");
    }
  }
  if (std::abs(psi().norm() - 1.0) > 1e-8) {
    fail(ErrorKind::Normalization, "block_unit_norm",
         "assets [a1, a2] must have unit norm");
  }
  for (int r = 1; r < m_; ++r) {
    if (std::abs(group(r).norm() - 1.0) > 1e-8) {
      std::ostringstream msg;
      msg << "asset group B_" << r << " must have unit norm";
      fail(ErrorKind::Normalization, "block_unit_norm", msg.str());
    }
  }
}

bool PortfolioSpec::is_sorted_descending() const {
  for (std::size_t i = 1; i < assets_.size(); ++i) {
    if (assets_[i - 1] < assets_[i]) {
      return false;
    }
  }
  return true;
}

ComplexVector PortfolioSpec::psi() const {
  ComplexVector v(2);
  v << assets_[0], assets_[1];
  return v;
}

ComplexVector PortfolioSpec::group(int r) const {
  if (r < 1 || r >= m_) {
    fail(ErrorKind::Index, "group_index", "asset group index out of range");
  }
  const std::size_t start = std::size_t{1} << r;
  const std::size_t len = std::size_t{1} << r;
  ComplexVector v(static_cast<Eigen::Index>(len));
  for (std::size_t i = 0; i < len; ++i) {
    v(static_cast<Eigen::Index>(i)) = assets_[start + i];
  }
  return v;
}

std::uint64_t bits_to_index(const std::vector<int> &bits) {
  std::uint64_t index = 0;
  for (std::size_t r = 0; r < bits.size(); ++r) {
    if (bits[r] != 0) {
      index |= std::uint64_t{1} << r;
    }
  }
  return index;
}

std::vector<int> index_to_bits(std::uint64_t index, int m) {
  std::vector<int> bits(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    bits[static_cast<std::size_t>(r)] = static_cast<int>((index >> r) & 1U);
  }
  return bits;
}

QuantumState portfolio_circuit(const PortfolioSpec &spec) {
  QuantumState state = init_amplitudes(spec.psi());
  for (int r = 1; r < spec.m(); ++r) {
    state = hadamard_addsub_inplace(std::move(state), spec.group(r),
                                    AddSubMode::Abstract);
  }
  return state;
}

double portfolio_closed_form(const PortfolioSpec &spec, const std::vector<int> &bits) {
  const int m = spec.m();
  if (static_cast<int>(bits.size()) != m) {
    fail(ErrorKind::Shape, "bit_count", "portfolio bits must have length m");
  }
  const std::uint64_t index = bits_to_index(bits);
  const auto &a = spec.assets();
  double value = a[static_cast<std::size_t>(bits[0])] / std::ldexp(1.0, m - 1);
  for (int r = 1; r < m; ++r) {
    const std::uint64_t within = index & ((std::uint64_t{1} << r) - 1);
    const double asset = a[(std::size_t{1} << r) + within];
    const double sign = bits[static_cast<std::size_t>(r)] != 0 ? -1.0 : 1.0;
    value += sign * asset / std::ldexp(1.0, m - r);
  }
  return value;
}

double portfolio_group_sum(const PortfolioSpec &spec, const std::vector<int> &bits) {
  const int m = spec.m();
  if (static_cast<int>(bits.size()) != m) {
    fail(ErrorKind::Shape, "bit_count", "portfolio bits must have length m");
  }
  const auto &a = spec.assets();
  const auto sign = [&](int r) { return bits[static_cast<std::size_t>(r)] != 0 ? -1.0 : 1.0; };
  // 1-based asset a_{1 + i0}.
  double f = sign(0) * a[static_cast<std::size_t>(bits[0])];
  for (int r = 1; r < m; ++r) {
    std::size_t offset = 0;
    for (int s = 0; s < r; ++s) {
      offset += static_cast<std::size_t>(bits[static_cast<std::size_t>(s)]) << (r - 1 - s);
    }
    // 1-based a_{2^r + 1 + offset}.
    f += sign(r) * a[(std::size_t{1} << r) + offset];
  }
  return f / std::ldexp(1.0, m - 1);
}

std::map<std::uint64_t, double> portfolio_estimate(const PortfolioSpec &spec,
                                                   std::uint64_t shots,
                                                   std::uint64_t seed) {
  const ShotHistogram hist = sample(portfolio_circuit(spec), shots, seed);
  std::map<std::uint64_t, double> freq;
  for (const auto &[index, count] : hist.counts) {
    freq[index] = static_cast<double>(count) / static_cast<double>(shots);
  }
  return freq;
}

SignalResult signal_filter(const SignalSpec &spec) {
  const int n = log2_length(spec.samples.size(), "signal");
  const auto dim = static_cast<Eigen::Index>(spec.samples.size());
  if (std::abs(spec.scale_a) > 1.0) {
    fail(ErrorKind::Contraction, "contraction",
         "signal scale |a| must not exceed 1");
  }
  if (std::abs(spec.bias_b) > 1.0) {
    fail(ErrorKind::Normalization, "translation_unit_norm",
         "signal bias |b| must not exceed 1");
  }
  ComplexVector x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    x(i) = spec.samples[static_cast<std::size_t>(i)];
  }
  if (!all_finite(x)) {
    fail(ErrorKind::InvalidInput, "finite_entries", "signal has non-finite samples");
  }
  const double scale = x.norm();
  if (scale == 0.0) {
    fail(ErrorKind::Normalization, "unit_norm", "signal is identically zero");
  }
  const ComplexVector xhat = x / scale;

  ComplexVector bias = spec.bias_vector;
  if (bias.size() == 0) {
    bias = ComplexVector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  }
  if (bias.size() != dim || std::abs(bias.norm() - 1.0) > 1e-8) {
    fail(ErrorKind::Normalization, "bias_unit_norm",
         "bias vector must have the signal length and unit norm");
  }

  SignalResult out;
  for (Eigen::Index i = 0; i < dim; ++i) {
    out.t.push_back(static_cast<double>(i) / static_cast<double>(dim));
  }

  // Classical reference.
  const ComplexVector spectrum = unitary_dft(xhat, false);
  const ComplexVector filtered = spec.scale_a * spectrum + spec.bias_b * bias;
  out.classical_out = scale * unitary_dft(filtered, true);

  // The QFT kernel has the opposite sign, so its frequency k is the
  // classical frequency -k mod M; reflect the bias accordingly.
  ComplexVector bias_qft(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    bias_qft(k) = bias((dim - k) % dim);
  }
  const auto data = QubitIndexSet::range(0, n);
  const QuantumState freq = qft(init_amplitudes(xhat), data, false);

  const ComplexMatrix a = spec.scale_a * ComplexMatrix::Identity(dim, dim);
  AffineStep step = AffineStep::linear(a);
  if (spec.bias_b != 0.0) {
    step = std::abs(spec.bias_b) == 1.0
               ? AffineStep::translate(a, spec.bias_b * bias_qft)
               : AffineStep::partial(a, spec.bias_b * bias_qft);
  }
  const AffineSequence seq{n, freq.amplitudes(), {step}};
  PipelineResult res = run_pipeline(seq, AddSubMode::Abstract);
  res.state = qft(std::move(res.state), data, true);
  out.quantum_out = scale * extract_result(res);
  return out;
}

std::vector<double> two_tone_signal(std::size_t length, double f1, double a1,
                                    double f2, double a2) {
  std::vector<double> x(length);
  for (std::size_t i = 0; i < length; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(length);
    x[i] = a1 * std::sin(2.0 * kPi * f1 * t) + a2 * std::sin(2.0 * kPi * f2 * t);
  }
  return x;
}

} // namespace qaffine
