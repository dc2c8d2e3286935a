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

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace onticlab {

/// A seeded pseudo-random stream. Each thread or check owns its own stream;
/// streams are never shared.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform double on [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal deviate.
  double normal() { return normal_(engine_); }

  /// Complex Gaussian with independent standard normal real and imaginary parts.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// SplitMix64 output function.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Derives the seed of an independent sub-stream from a master seed, a
/// textual key (e.g. the check name) and a counter. Adding or removing other
/// keys never changes the seed of an existing (key, index) pair.
std::uint64_t derive_seed(std::uint64_t master, std::string_view key,
                          std::uint64_t index) noexcept;

inline RandomStream derive_stream(std::uint64_t master, std::string_view key,
                                  std::uint64_t index) {
  return RandomStream(derive_seed(master, key, index));
}

}  // namespace onticlab
