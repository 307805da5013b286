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
#include <random>

#include <benchmark/benchmark.h>

#include "qaffine/apps.hpp"
#include "qaffine/blockenc.hpp"
#include "qaffine/pipeline.hpp"
#include "qaffine/synthesis.hpp"

namespace {

using namespace qaffine;

ComplexMatrix gaussian(std::mt19937_64 &rng, Eigen::Index dim) {
  std::normal_distribution<double> nd;
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    m.data()[i] = Complex(nd(rng), nd(rng));
  }
  return m;
}

ComplexMatrix random_unitary(std::mt19937_64 &rng, Eigen::Index dim) {
  Eigen::HouseholderQR<ComplexMatrix> qr(gaussian(rng, dim));
  return qr.householderQ();
}

ComplexVector random_state(std::mt19937_64 &rng, Eigen::Index dim) {
  std::normal_distribution<double> nd;
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = Complex(nd(rng), nd(rng));
  }
  return v / v.norm();
}

void BM_ApplyTwoQubitGate(benchmark::State &state) {
  std::mt19937_64 rng(1);
  const int q = static_cast<int>(state.range(0));
  const ComplexMatrix u = random_unitary(rng, 4);
  QuantumState s = init_amplitudes(random_state(rng, Eigen::Index{1} << q));
  for (auto _ : state) {
    s = apply_unitary(std::move(s), u, {0, q - 1});
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << q));
}
BENCHMARK(BM_ApplyTwoQubitGate)->DenseRange(8, 20, 4);

void BM_BlockEncode(benchmark::State &state) {
  std::mt19937_64 rng(2);
  ComplexMatrix a = gaussian(rng, state.range(0));
  a /= spectral_norm(a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(block_encode(a).unitary.data());
  }
}
BENCHMARK(BM_BlockEncode)->RangeMultiplier(2)->Range(4, 64);

void BM_RunPipeline(benchmark::State &state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto dim = Eigen::Index{1} << n;
  AffineSequence seq{n, random_state(rng, dim), {}};
  for (int j = 0; j < k; ++j) {
    ComplexMatrix a = gaussian(rng, dim);
    a /= spectral_norm(a);
    seq.steps.push_back(AffineStep::translate(a, random_state(rng, dim)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(seq).state.amplitudes().data());
  }
}
BENCHMARK(BM_RunPipeline)->Args({2, 2})->Args({4, 3})->Args({6, 4});

void BM_Synthesize(benchmark::State &state) {
  std::mt19937_64 rng(4);
  const int q = static_cast<int>(state.range(0));
  const ComplexMatrix u = random_unitary(rng, Eigen::Index{1} << q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize(u, q).size());
  }
}
BENCHMARK(BM_Synthesize)->DenseRange(1, 5);

void BM_Qft(benchmark::State &state) {
  std::mt19937_64 rng(5);
  const int q = static_cast<int>(state.range(0));
  QuantumState s = init_amplitudes(random_state(rng, Eigen::Index{1} << q));
  for (auto _ : state) {
    s = qft(std::move(s), QubitIndexSet::range(0, q), false);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_Qft)->DenseRange(6, 14, 4);

} // namespace

BENCHMARK_MAIN();
