// Copyright 2026 The graphsamp Authors.
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

// Portable draws on top of std::mt19937_64. The std distributions are
// implementation-defined, so results would differ between standard libraries.

#ifndef GRAPHSAMP_SRC_RANDOM_UTIL_H_
#define GRAPHSAMP_SRC_RANDOM_UTIL_H_

#include <cstdint>
#include <random>

namespace graphsamp::internal {

using Rng = std::mt19937_64;

// Uniform in [0, 1).
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in [0, n); n > 0.
inline std::uint64_t UniformIndex(Rng& rng, std::uint64_t n) {
  __extension__ using Wide = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<Wide>(rng()) * n) >> 64);
}

inline bool Bernoulli(Rng& rng, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return Uniform01(rng) < p;
}

// SplitMix64 finaliser; derives independent seeds from (base, index).
inline std::uint64_t MixSeed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace graphsamp::internal

#endif  // GRAPHSAMP_SRC_RANDOM_UTIL_H_
