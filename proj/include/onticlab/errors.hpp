// Copyright 2026 The onticlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace onticlab {

/// Raised when two objects live in Hilbert spaces of different dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a model reaches a state its own construction rules out.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a deterministic quadrature fails to reach its target accuracy.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}

  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

}  // namespace onticlab
