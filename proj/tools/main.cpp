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
//
// qaffine command-line front end.
//
// Exit codes: 0 success, 1 other failure, 2 schema or usage error,
// 3 violated precondition, 4 qubit capacity exceeded.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qaffine/apps.hpp"
#include "qaffine/baseline.hpp"
#include "qaffine/error.hpp"
#include "qaffine/io.hpp"
#include "qaffine/pipeline.hpp"
#include "qaffine/synthesis.hpp"

namespace fs = std::filesystem;
using namespace qaffine;

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

struct Common {
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  double tolerance = 1e-9;
};

std::uint64_t resolve_seed(const Common &c) {
  if (c.seed) {
    return *c.seed;
  }
  if (const char *env = std::getenv("QAFFINE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception &) {
      fail(ErrorKind::InvalidInput, "seed_format", "QAFFINE_SEED is not an unsigned integer");
    }
  }
  return kDefaultSeed;
}

fs::path out_path(const Common &c, const char *name) {
  fs::create_directories(c.out_dir);
  return fs::path(c.out_dir) / name;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Schema:
    return 2;
  case ErrorKind::Capacity:
    return 4;
  default:
    return 3;
  }
}

// --- run -------------------------------------------------------------------

struct RunOptions {
  std::string spec_path;
  std::string mode;
  bool verify = false;
  bool raw = false;
};

int cmd_run(const RunOptions &opt, const Common &common) {
  ProblemSpec spec = load_problem_spec(opt.spec_path);
  if (!opt.mode.empty()) {
    spec.mode = parse_mode(opt.mode);
  }
  const PipelineResult res = run_pipeline(spec.sequence, spec.mode);
  ResultBundle bundle;
  bundle.extracted = extract_result(res);
  if (opt.raw) {
    bundle.raw_amplitudes = res.state.amplitudes();
  }
  bundle.scale = res.scale;
  bundle.metadata = {res.k, res.n, std::string(to_string(spec.mode)), resolve_seed(common),
                     std::string(kToolVersion)};
  int rc = 0;
  if (opt.verify) {
    const double dev = max_abs_diff(bundle.extracted, classical_affine_compose(spec.sequence));
    bundle.max_deviation = dev;
    std::cout << "max deviation vs classical: " << format_double(dev) << "\n";
    if (dev > common.tolerance) {
      std::cerr << "error [oracle_agreement]: deviation exceeds tolerance "
                << format_double(common.tolerance) << "\n";
      rc = 1;
    }
  }
  write_text_file(out_path(common, "extracted.csv"), vector_to_csv(bundle.extracted));
  write_text_file(out_path(common, "result.json"), result_to_json(bundle));
  return rc;
}

// --- baseline ----------------------------------------------------------------

int cmd_baseline(const std::string &spec_path, bool verify, const Common &common) {
  const ProblemSpec spec = load_problem_spec(spec_path);
  if (spec.sequence.k() != 1) {
    fail(ErrorKind::Precondition, "single_step", "baseline handles exactly one affine step");
  }
  const AffineStep &step = spec.sequence.steps.front();
  const AugmentedAffine aug = build_augmented(step.a, step.translation(), spec.sequence.psi);
  ResultBundle bundle;
  bundle.extracted = run_augmented(aug);
  bundle.scale = 1;
  bundle.metadata = {1, spec.sequence.n, "augmented", resolve_seed(common),
                     std::string(kToolVersion)};
  int rc = 0;
  if (verify) {
    const double dev = max_abs_diff(bundle.extracted, classical_affine_compose(spec.sequence));
    bundle.max_deviation = dev;
    std::cout << "max deviation vs classical: " << format_double(dev) << "\n";
    rc = dev > common.tolerance ? 1 : 0;
  }
  std::cout << "augmented dilation: " << aug.enc.unitary.rows() << "x" << aug.enc.unitary.cols()
            << ", alpha " << format_double(aug.enc.alpha) << "\n";
  write_text_file(out_path(common, "extracted.csv"), vector_to_csv(bundle.extracted));
  write_text_file(out_path(common, "result.json"), result_to_json(bundle));
  return rc;
}

// --- gates compare -----------------------------------------------------------

ComplexVector random_unit(std::mt19937_64 &rng, Eigen::Index dim) {
  std::normal_distribution<double> nd;
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = Complex(nd(rng), nd(rng));
  }
  return v / v.norm();
}

int cmd_gates(const std::string &spec_path, const Common &common) {
  ComplexMatrix a;
  ComplexVector b, psi;
  if (!spec_path.empty()) {
    const ProblemSpec spec = load_problem_spec(spec_path);
    if (spec.sequence.n != 2 || spec.sequence.k() != 1) {
      fail(ErrorKind::Precondition, "two_qubit_single_step",
           "gates compare needs n = 2 and exactly one step");
    }
    a = spec.sequence.steps.front().a;
    b = spec.sequence.steps.front().translation();
    psi = spec.sequence.psi;
  } else {
    std::mt19937_64 rng(resolve_seed(common));
    std::normal_distribution<double> nd;
    a.resize(4, 4);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      a.data()[i] = Complex(nd(rng), nd(rng));
    }
    a /= spectral_norm(a);
    b = random_unit(rng, 4);
    psi = random_unit(rng, 4);
  }
  const MethodComparison cmp = compare_methods(a, b, psi);
  std::printf("%-12s %12s %12s %8s %14s\n", "method", "single-qubit", "multi-qubit", "total",
              "reconstruct");
  std::printf("%-12s %12zu %12zu %8zu %14.3g\n", "sequential", cmp.ours.single_qubit,
              cmp.ours.multi_qubit, cmp.ours.total, cmp.ours_reconstruction_error);
  std::printf("%-12s %12zu %12zu %8zu %14.3g\n", "augmented", cmp.augmented.single_qubit,
              cmp.augmented.multi_qubit, cmp.augmented.total,
              cmp.augmented_reconstruction_error);
  std::printf("result agreement: %.3g\n%s\n", cmp.agreement, cmp.note.c_str());
  write_text_file(out_path(common, "gatecounts.json"), gate_counts_to_json(cmp));
  return 0;
}

// --- demos -------------------------------------------------------------------

std::string bit_string(const std::vector<int> &bits) {
  std::string s;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    s += static_cast<char>('0' + *it);
  }
  return s;
}

int cmd_portfolio(const std::vector<double> &assets, std::uint64_t shots, const Common &common) {
  const PortfolioSpec spec(assets);
  const std::uint64_t seed = resolve_seed(common);
  const QuantumState s = portfolio_circuit(spec);
  const auto freq = portfolio_estimate(spec, shots, seed);
  std::string csv = "bits,amplitude,probability,empirical_frequency\n";
  std::printf("%-8s %12s %12s %12s\n", "bits", "amplitude", "probability", "frequency");
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    const std::string bits = bit_string(index_to_bits(i, spec.m()));
    const double amp = s.amplitude(i).real();
    const double p = std::norm(s.amplitude(i));
    const double f = freq.count(i) ? freq.at(i) : 0.0;
    csv += bits + "," + format_double(amp) + "," + format_double(p) + "," + format_double(f) + "\n";
    std::printf("%-8s %12.6f %12.6f %12.6f\n", bits.c_str(), amp, p, f);
  }
  if (!spec.is_sorted_descending()) {
    std::cerr << "note: assets are not sorted in descending order\n";
  }
  write_text_file(out_path(common, "portfolio.csv"), csv);
  return 0;
}

struct SignalOptions {
  std::size_t length = 64;
  double f1 = 3, a1 = 1.0, f2 = 11, a2 = 0.4;
  double scale_a = 0.7;
  double bias_b = 0.1;
};

int cmd_signal(const SignalOptions &opt, const Common &common) {
  const std::vector<double> x = two_tone_signal(opt.length, opt.f1, opt.a1, opt.f2, opt.a2);
  const SignalResult r = signal_filter({x, opt.scale_a, opt.bias_b, {}});
  std::string csv = "t,input,quantum_out,classical_out\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto idx = static_cast<Eigen::Index>(i);
    csv += format_double(r.t[i]) + "," + format_double(x[i]) + "," +
           format_double(r.quantum_out(idx).real()) + "," +
           format_double(r.classical_out(idx).real()) + "\n";
  }
  const double dev = max_abs_diff(r.quantum_out, r.classical_out);
  std::cout << "quantum vs classical max deviation: " << format_double(dev) << "\n";
  write_text_file(out_path(common, "signal.csv"), csv);
  return dev > common.tolerance ? 1 : 0;
}

void add_common(CLI::App *cmd, Common &c) {
  cmd->add_option("--seed", c.seed, "RNG seed (default: $QAFFINE_SEED, else 12345)");
  cmd->add_option("--out-dir", c.out_dir, "Directory for output files")->capture_default_str();
  cmd->add_option("--tolerance", c.tolerance, "Tolerance for --verify and demo checks")
      ->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Sequential affine transformations on quantum amplitudes"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Common common;

  RunOptions run_opt;
  auto *run = app.add_subcommand("run", "Run an affine sequence from a JSON problem spec");
  run->alias("affine-run");
  run->add_option("spec", run_opt.spec_path, "Problem spec (JSON)")->required();
  run->add_option("--mode", run_opt.mode, "abstract or physical (overrides the spec)");
  run->add_flag("--verify", run_opt.verify, "Compare against the classical composition");
  run->add_flag("--raw-amplitudes", run_opt.raw, "Include the full statevector in result.json");
  add_common(run, common);

  std::string baseline_spec;
  bool baseline_verify = false;
  auto *baseline = app.add_subcommand("baseline", "Single step through the augmented matrix");
  baseline->add_option("spec", baseline_spec, "Problem spec with one step")->required();
  baseline->add_flag("--verify", baseline_verify, "Compare against the classical result");
  add_common(baseline, common);

  std::string gates_spec;
  auto *gates = app.add_subcommand("gates", "Gate-count tools");
  gates->require_subcommand(1);
  auto *compare = gates->add_subcommand("compare", "Gate counts of both methods (n = 2, k = 1)");
  compare->add_option("spec", gates_spec, "Problem spec; random instance from --seed if omitted");
  add_common(compare, common);

  auto *demo = app.add_subcommand("demo", "Application demos");
  demo->require_subcommand(1);
  std::vector<double> assets{0.8, 0.6, 0.6, 0.8};
  std::uint64_t shots = 1'000'000;
  auto *portfolio = demo->add_subcommand("portfolio", "Portfolio return amplitudes");
  portfolio->add_option("--assets", assets, "Asset values, 2^m entries, unit-norm blocks")
      ->delimiter(',');
  portfolio->add_option("--shots", shots, "Measurement shots")->capture_default_str();
  add_common(portfolio, common);

  SignalOptions sig;
  auto *signal = demo->add_subcommand("signal", "QFT, affine filter, inverse QFT");
  signal->add_option("--length", sig.length, "Samples (power of two)")->capture_default_str();
  signal->add_option("--f1", sig.f1)->capture_default_str();
  signal->add_option("--a1", sig.a1)->capture_default_str();
  signal->add_option("--f2", sig.f2)->capture_default_str();
  signal->add_option("--a2", sig.a2)->capture_default_str();
  signal->add_option("--scale-a", sig.scale_a, "Frequency-domain scale, |a| <= 1")
      ->capture_default_str();
  signal->add_option("--bias-b", sig.bias_b, "Uniform frequency-domain bias weight")
      ->capture_default_str();
  add_common(signal, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      return cmd_run(run_opt, common);
    }
    if (baseline->parsed()) {
      return cmd_baseline(baseline_spec, baseline_verify, common);
    }
    if (compare->parsed()) {
      return cmd_gates(gates_spec, common);
    }
    if (portfolio->parsed()) {
      return cmd_portfolio(assets, shots, common);
    }
    if (signal->parsed()) {
      return cmd_signal(sig, common);
    }
  } catch (const Error &e) {
    std::cerr << "error [" << e.invariant() << "]: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
