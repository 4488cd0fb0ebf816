//
// Copyright 2026 The codemix Authors
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
//

#ifndef CODEMIX_RNG_H_
#define CODEMIX_RNG_H_

#include <cstdint>

namespace codemix {

// SplitMix64 stream. All randomness in the toolkit is drawn through this type
// and the helpers below, never through <random> distributions, whose output
// is implementation defined. This keeps every artifact reproducible across
// standard libraries and machines.
class RandomStream {
 public:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit RandomStream(uint64_t state) : state_(state) {}

  uint64_t NextU64() {
    state_ += kGamma;
    return Mix64(state_);
  }

  // Uniform on [0, 1) with 53 bits of resolution.
  double NextDouble() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t UniformBelow(uint64_t bound);

  // True with probability p; always consumes exactly one draw.
  bool Bernoulli(double p) { return NextDouble() < p; }

  // Poisson variate. Small means use multiplicative inversion; large means
  // are split into a sum of small-mean draws, which stays exact.
  uint64_t Poisson(double mean);

  uint64_t state() const { return state_; }

  // SplitMix64 output finalizer.
  static uint64_t Mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
};

// Multiplier applied to the record id before it is folded into the seed.
inline constexpr uint64_t kStreamIdMultiplier = 0xD1B54A32D192ED03ULL;

// Independent stream for one record:
//   state = Mix64(seed ^ (doc_id * kStreamIdMultiplier))
// The map doc_id -> state is a bijection for a fixed seed, so distinct ids
// never share a starting state.
RandomStream DeriveStream(uint64_t seed, uint64_t doc_id);

}  // namespace codemix

#endif  // CODEMIX_RNG_H_
