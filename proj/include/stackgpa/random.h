// Copyright 2026 The stackgpa Authors
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

#ifndef STACKGPA_RANDOM_H_
#define STACKGPA_RANDOM_H_

#include <cstdint>

#include "stackgpa/game.h"
#include "stackgpa/rational.h"

namespace stackgpa {

// Counter-based generator: draw `counter` of stream `stream` under `seed`.
// Each draw is a pure function of its key, so results never depend on the
// order in which draws are requested.
inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t CounterRandom(uint64_t seed, uint64_t stream,
                              uint64_t counter) {
  return SplitMix64(SplitMix64(SplitMix64(seed) ^ stream) ^ counter);
}

// Index i with cumulative(i-1) <= bits/2^64 < cumulative(i), computed
// exactly against the rational weights.
int SampleIndex(const MixedStrategy& strategy, uint64_t bits);

}  // namespace stackgpa

#endif  // STACKGPA_RANDOM_H_
