// include/fairtrial/hashing.h

// Copyright 2026  The fairtrial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRTRIAL_HASHING_H_
#define FAIRTRIAL_HASHING_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace fairtrial {

/// One round of the splitmix64 finalizer.
constexpr uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for an entity-local random stream. Hashes the 8 little-endian bytes
/// of `seed` followed by the bytes of `key`, folding each byte through
/// splitmix64, so streams do not depend on the order entities are visited.
uint64_t DeriveSeed(uint64_t seed, std::string_view key);

/// 64-bit FNV-1a content digest.
uint64_t Fnv1a64(std::string_view bytes);

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Rejection sampling on the raw 64-bit
/// output, so results are identical across standard library vendors.
uint64_t UniformIndex(Rng &rng, uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double UniformUnit(Rng &rng);

/// Standard normal variate (Box-Muller, one draw per call).
double StandardNormal(Rng &rng);

}  // namespace fairtrial

#endif  // FAIRTRIAL_HASHING_H_
