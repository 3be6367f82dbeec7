// Copyright 2026 The pprq Authors
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

#ifndef PPRQ_RNG_H_
#define PPRQ_RNG_H_

#include <cstdint>
#include <random>

namespace pprq {

// splitmix64 finalizer. Used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

// Seed for stream (a, b) under a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b = 0);

// Thin wrapper over mt19937_64. The std distributions are avoided on
// purpose: their output is implementation-defined, ours is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform double in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

  // Child stream, independent of this one's future draws.
  Rng split() { return Rng(mix64(engine_() ^ 0x5851f42d4c957f2dULL)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pprq

#endif  // PPRQ_RNG_H_
