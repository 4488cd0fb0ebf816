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

#include "codemix/rng.h"

#include <cmath>
#include <stdexcept>

namespace codemix {
namespace {

constexpr double kPoissonChunk = 16.0;

uint64_t PoissonSmall(RandomStream& rng, double mean) {
  const double limit = std::exp(-mean);
  uint64_t k = 0;
  double product = rng.NextDouble();
  while (product >= limit) {
    ++k;
    product *= rng.NextDouble();
  }
  return k;
}

}  // namespace

uint64_t RandomStream::UniformBelow(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("UniformBelow: bound is zero");
  // Lemire's multiply-shift with rejection.
  unsigned __int128 m =
      static_cast<unsigned __int128>(NextU64()) * static_cast<unsigned __int128>(bound);
  auto low = static_cast<uint64_t>(m);
  if (low < bound) {
    const uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(NextU64()) *
          static_cast<unsigned __int128>(bound);
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

uint64_t RandomStream::Poisson(double mean) {
  if (!(mean > 0.0)) return 0;
  uint64_t total = 0;
  while (mean > kPoissonChunk) {
    total += PoissonSmall(*this, kPoissonChunk);
    mean -= kPoissonChunk;
  }
  return total + PoissonSmall(*this, mean);
}

RandomStream DeriveStream(uint64_t seed, uint64_t doc_id) {
  return RandomStream(RandomStream::Mix64(seed ^ (doc_id * kStreamIdMultiplier)));
}

}  // namespace codemix
