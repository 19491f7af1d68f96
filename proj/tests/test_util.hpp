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

#ifndef DKS_TESTS_TEST_UTIL_HPP_
#define DKS_TESTS_TEST_UTIL_HPP_

#include <vector>

#include "dks/exact.hpp"
#include "dks/point_set.hpp"
#include "dks/rng.hpp"

namespace dks::test {

inline PointSet random_points(std::size_t n, int d, Rng& rng, double lo = 0.0,
                              double hi = 1.0) {
  std::vector<double> c(n * static_cast<std::size_t>(d));
  for (double& x : c) x = rng.uniform(lo, hi);
  return PointSet(d, std::move(c));
}

// Coordinates drawn from a small per-axis alphabet, so ties are common.
inline PointSet random_lattice_points(std::size_t n, int d,
                                      std::uint32_t alphabet, Rng& rng) {
  std::vector<double> c(n * static_cast<std::size_t>(d));
  for (double& x : c)
    x = static_cast<double>(rng.below(alphabet) + 1) /
        static_cast<double>(alphabet);
  return PointSet(d, std::move(c));
}

// |fracP - fracQ| at z by direct membership counting, via the one-rounding
// helper shared with the library.
inline double diff_at(const PointSet& P, const PointSet& Q,
                      const DominatingRange& z) {
  return fraction_difference(count_dominated(P, z), P.size(),
                             count_dominated(Q, z), Q.size());
}

}  // namespace dks::test

#endif  // DKS_TESTS_TEST_UTIL_HPP_
