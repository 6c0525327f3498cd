// Copyright 2026 The softsched Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace softsched {

/// Portable random stream.
///
/// std::mt19937_64 is bit-exact across standard libraries but the std
/// distributions are not, so the few draws we need are implemented here on
/// top of the raw engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for replication `run_id` of root seed `seed`.
  static Rng for_run(std::uint64_t seed, std::uint64_t run_id);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform integer on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Poisson variate with the given mean (Knuth's product method for small
  /// means, normal-free inversion by chunks for larger ones).
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace softsched
