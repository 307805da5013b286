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
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qaffine {

/// Failure categories raised by the library. The CLI maps these onto its
/// documented exit codes.
enum class ErrorKind {
  InvalidInput,
  NotPsd,
  Shape,
  Normalization,
  Unitarity,
  Index,
  Capacity,
  Encoding,
  Precondition,
  Contraction,
  MissingWitness,
  Schema,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying an error category and the name of the violated
/// invariant (e.g. "contraction", "unit_norm").
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string invariant, const std::string &message)
      : std::runtime_error(message), kind_(kind),
        invariant_(std::move(invariant)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string &invariant() const noexcept { return invariant_; }

private:
  ErrorKind kind_;
  std::string invariant_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string invariant,
                              const std::string &message) {
  throw Error(kind, std::move(invariant), message);
}

} // namespace qaffine
