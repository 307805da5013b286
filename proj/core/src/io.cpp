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
#include "qaffine/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qaffine/error.hpp"

namespace qaffine {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string &message) {
  fail(ErrorKind::Schema, "problem_schema", message);
}

Complex parse_complex(const json &j, const std::string &where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    schema_error(where + ": expected a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector parse_vector(const json &j, const std::string &where) {
  if (!j.is_array() || j.empty()) {
    schema_error(where + ": expected a non-empty array of [re, im] pairs");
  }
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) =
        parse_complex(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

ComplexMatrix parse_matrix(const json &j, const std::string &where) {
  if (!j.is_array() || j.empty()) {
    schema_error(where + ": expected a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    schema_error(where + "[0]: expected a non-empty row");
  }
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) {
      schema_error(row_where + ": rows must all have the same length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_complex(j[r][c], row_where + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const ComplexVector &v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(complex_json(v(i)));
  }
  return out;
}

json matrix_json(const ComplexMatrix &m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_json(m(r, c)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

json report_json(const GateCountReport &r) {
  return json{{"single_qubit", r.single_qubit},
              {"multi_qubit", r.multi_qubit},
              {"total", r.total}};
}

} // namespace

std::string_view to_string(AddSubMode mode) noexcept {
  return mode == AddSubMode::Abstract ? "abstract" : "physical";
}

AddSubMode parse_mode(std::string_view text) {
  if (text == "abstract") {
    return AddSubMode::Abstract;
  }
  if (text == "physical") {
    return AddSubMode::Physical;
  }
  schema_error("mode must be \"abstract\" or \"physical\"");
}

ProblemSpec parse_problem_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    schema_error("top level must be an object");
  }
  for (const char *key : {"version", "n", "psi", "steps"}) {
    if (!doc.contains(key)) {
      schema_error(std::string("missing required field \"") + key + "\"");
    }
  }
  if (!doc["version"].is_number_integer() ||
      doc["version"].get<int>() != kProblemSpecVersion) {
    schema_error("unsupported version (expected 1)");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    schema_error("n must be a positive integer");
  }

  ProblemSpec spec;
  spec.sequence.n = doc["n"].get<int>();
  if (spec.sequence.n > kMaxQubits) {
    fail(ErrorKind::Capacity, "qubit_capacity", "n exceeds the 24-qubit cap");
  }
  spec.sequence.psi = parse_vector(doc["psi"], "psi");
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) {
      schema_error("mode must be a string");
    }
    spec.mode = parse_mode(doc["mode"].get<std::string>());
  }
  const json &steps = doc["steps"];
  if (!steps.is_array() || steps.empty()) {
    schema_error("steps must be a non-empty array");
  }
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const std::string where = "steps[" + std::to_string(j) + "]";
    const json &step = steps[j];
    if (!step.is_object() || !step.contains("A") || !step.contains("B")) {
      schema_error(where + ": expected an object with \"A\" and \"B\"");
    }
    ComplexMatrix a = parse_matrix(step["A"], where + ".A");
    if (step["B"].is_string()) {
      if (step["B"].get<std::string>() != "zero") {
        schema_error(where + ".B: the only string value allowed is \"zero\"");
      }
      spec.sequence.steps.push_back(AffineStep::linear(std::move(a)));
    } else {
      spec.sequence.steps.push_back(
          AffineStep::translate(std::move(a), parse_vector(step["B"], where + ".B")));
    }
  }
  validate(spec.sequence, false);
  return spec;
}

ProblemSpec load_problem_spec(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    schema_error("cannot read " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem_spec(text.str());
}

std::string serialize_problem_spec(const ProblemSpec &spec) {
  json doc;
  doc["version"] = spec.version;
  doc["n"] = spec.sequence.n;
  doc["mode"] = std::string(to_string(spec.mode));
  doc["psi"] = vector_json(spec.sequence.psi);
  json steps = json::array();
  for (const AffineStep &step : spec.sequence.steps) {
    json s;
    s["A"] = matrix_json(step.a);
    if (step.kind == TranslationKind::Zero) {
      s["B"] = "zero";
    } else {
      s["B"] = vector_json(step.b);
    }
    steps.push_back(std::move(s));
  }
  doc["steps"] = std::move(steps);
  return doc.dump(2) + "\n";
}

std::string result_to_json(const ResultBundle &bundle) {
  json doc;
  doc["extracted"] = vector_json(bundle.extracted);
  if (bundle.raw_amplitudes) {
    doc["raw_amplitudes"] = vector_json(*bundle.raw_amplitudes);
  }
  doc["scale"] = bundle.scale;
  doc["metadata"] = json{{"k", bundle.metadata.k},
                         {"n", bundle.metadata.n},
                         {"mode", bundle.metadata.mode},
                         {"seed", bundle.metadata.seed},
                         {"tool_version", bundle.metadata.tool_version}};
  if (bundle.max_deviation) {
    doc["max_deviation"] = *bundle.max_deviation;
  }
  return doc.dump(2) + "\n";
}

std::string gate_counts_to_json(const MethodComparison &cmp) {
  json doc;
  doc["sequential"] = report_json(cmp.ours);
  doc["sequential"]["reconstruction_error"] = cmp.ours_reconstruction_error;
  doc["augmented"] = report_json(cmp.augmented);
  doc["augmented"]["reconstruction_error"] = cmp.augmented_reconstruction_error;
  doc["result_agreement"] = cmp.agreement;
  doc["note"] = cmp.note;
  doc["tool_version"] = std::string(kToolVersion);
  return doc.dump(2) + "\n";
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string vector_to_csv(const ComplexVector &v) {
  std::string out = "index,re,im\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(v(i).real());
    out += ',';
    out += format_double(v(i).imag());
    out += '\n';
  }
  return out;
}

ComplexVector vector_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "index,re,im") {
    fail(ErrorKind::Schema, "csv_header", "expected header index,re,im");
  }
  std::vector<Complex> values;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::istringstream row(line);
    std::string idx, re, im;
    if (!std::getline(row, idx, ',') || !std::getline(row, re, ',') ||
        !std::getline(row, im)) {
      fail(ErrorKind::Schema, "csv_row", "malformed CSV row: " + line);
    }
    if (std::stoull(idx) != values.size()) {
      fail(ErrorKind::Schema, "csv_row", "CSV indices must be 0, 1, 2, ...");
    }
    values.emplace_back(std::stod(re), std::stod(im));
  }
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = values[i];
  }
  return v;
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(ErrorKind::InvalidInput, "writable_output", "cannot write " + path.string());
  }
  out << text;
}

} // namespace qaffine
