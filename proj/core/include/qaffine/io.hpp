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
 * File formats: problem specifications (JSON, version 1), result bundles
 * (JSON) and `index,re,im` CSV tables.
 *
 * Complex numbers are JSON [re, im] pairs. CSV uses LF line endings and
 * 17 significant digits so doubles round-trip exactly.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qaffine/pipeline.hpp"
#include "qaffine/synthesis.hpp"

namespace qaffine {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kProblemSpecVersion = 1;

struct ProblemSpec {
  int version = kProblemSpecVersion;
  AffineSequence sequence;
  AddSubMode mode = AddSubMode::Abstract;
};

std::string_view to_string(AddSubMode mode) noexcept;
/// "abstract" or "physical"; anything else raises Schema.
AddSubMode parse_mode(std::string_view text);

/// Structural problems raise ErrorKind::Schema. Shape and normalization
/// invariants of the sequence are re-checked and raise their own kinds.
ProblemSpec parse_problem_spec(std::string_view json_text);
ProblemSpec load_problem_spec(const std::filesystem::path &path);
std::string serialize_problem_spec(const ProblemSpec &spec);

struct ResultMetadata {
  int k = 0;
  int n = 0;
  std::string mode;
  std::uint64_t seed = 0;
  std::string tool_version{kToolVersion};
};

struct ResultBundle {
  ComplexVector extracted;
  std::optional<ComplexVector> raw_amplitudes;
  std::uint64_t scale = 1;
  ResultMetadata metadata;
  std::optional<double> max_deviation;
};

std::string result_to_json(const ResultBundle &bundle);

std::string gate_counts_to_json(const MethodComparison &cmp);

/// Header `index,re,im`, one row per entry.
std::string vector_to_csv(const ComplexVector &v);
ComplexVector vector_from_csv(std::string_view text);

/// "%.17g" formatting.
std::string format_double(double value);

void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace qaffine
