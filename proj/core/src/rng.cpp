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

#include "softsched/rng.hpp"

#include <cmath>

#include "softsched/error.hpp"

namespace softsched {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::for_run(std::uint64_t seed, std::uint64_t run_id) {
  return Rng(mix64(mix64(seed) ^ mix64(run_id + 0x632be59bd9b4e019ULL)));
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below: bound must be positive");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % bound);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

std::uint64_t Rng::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw InvalidArgument("Rng::poisson: mean must be finite and nonnegative");
  }
  // exp(-mean) underflows for large means; a Poisson(a+b) is the sum of
  // independent Poisson(a) and Poisson(b).
  constexpr double kChunk = 30.0;
  std::uint64_t total = 0;
  while (mean > 0.0) {
    const double part = mean > kChunk ? kChunk : mean;
    mean -= part;
    const double threshold = std::exp(-part);
    double product = uniform01();
    while (product > threshold) {
      ++total;
      product *= uniform01();
    }
  }
  return total;
}

}  // namespace softsched
