// Copyright 2026 The dks Authors.
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

#ifndef DKS_RNG_HPP_
#define DKS_RNG_HPP_

#include <cstdint>
#include <random>

namespace dks {

// splitmix64, used to derive independent sub-seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  return splitmix64(base ^ splitmix64(salt));
}

// Deterministic RNG. All randomized code in the library draws through this
// type so a (seed, build) pair reproduces results exactly; the helpers avoid
// std::uniform_* distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t u64() { return eng_(); }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform integer in [0, n). Plain modulo; n is tiny relative to 2^64 in
  // every use, so the bias is immaterial.
  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(u64() % n);
  }

  // Independent child stream; deterministic in (seed, salt).
  Rng fork(std::uint64_t salt) const { return Rng(derive_seed(seed_, salt)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace dks

#endif  // DKS_RNG_HPP_
