// Copyright 2026 The relaxbandit Authors.
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

#ifndef RELAXBANDIT_RNG_H_
#define RELAXBANDIT_RNG_H_

#include <cstdint>
#include <random>

namespace relaxbandit {

// Identifies the consumer of a random stream inside one replication. Each
// consumer gets its own engine so that adding draws to one consumer never
// shifts the values seen by another.
enum class Stream : std::uint64_t {
  kContexts = 1,   // realized context sequence x_1..x_T
  kAdversary = 2,  // cost schedule construction
  kFuture = 3,     // future draws sampled by the relaxation learner
  kAction = 4,     // action sampling from the played distribution
  kCoin = 5,       // estimator coin
  kPolicies = 6,   // random policy class generation
  kVerify = 7,     // property checks and Monte Carlo validators
};

// SplitMix64 finalizer. Used only to turn (seed, replication, stream) into
// well-separated engine seeds.
constexpr std::uint64_t MixBits(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// A seeded random stream with a fully specified output sequence.
//
// The engine is std::mt19937_64, whose output is fixed by the standard. The
// conversions below are written out explicitly because the standard
// distributions are implementation-defined:
//   Uniform01()  = (next() >> 11) * 2^-53, a double in [0, 1)
//   Bernoulli(p) = Uniform01() < p, exactly one draw
//   Bits()       = next(), 64 raw bits
//   Index(n)     = floor(Uniform01() * n), exactly one draw
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Seed for consumer `stream` of replication `replication` under `master`.
  static std::uint64_t DeriveSeed(std::uint64_t master,
                                  std::uint64_t replication, Stream stream) {
    std::uint64_t h = MixBits(master);
    h = MixBits(h ^ (replication * 0xD1B54A32D192ED03ULL));
    return MixBits(h ^ static_cast<std::uint64_t>(stream));
  }

  static Rng ForStream(std::uint64_t master, std::uint64_t replication,
                       Stream stream) {
    return Rng(DeriveSeed(master, replication, stream));
  }

  std::uint64_t Bits() { return engine_(); }

  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return Uniform01() < p; }

  std::size_t Index(std::size_t n) {
    auto i = static_cast<std::size_t>(Uniform01() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace relaxbandit

#endif  // RELAXBANDIT_RNG_H_
