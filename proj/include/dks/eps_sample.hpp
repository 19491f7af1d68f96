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

#ifndef DKS_EPS_SAMPLE_HPP_
#define DKS_EPS_SAMPLE_HPP_

#include <cstdint>
#include <vector>

#include "dks/point_set.hpp"

namespace dks {

// A +/-1 labeling of a point set, aligned by index.
struct SignedColoring {
  std::vector<std::int8_t> chi;
  std::uint64_t rng_seed = 0;
};

enum class RangeFamily { kDominating, kRect };

// Online self-balancing coloring. Points arrive in a seed-determined random
// order; each point's sign is drawn with probability (1 - clamp(w/c,-1,1))/2
// of being +1, where w is the signed count of the point's dominating cell
// prefix on a coordinate-compressed grid of ceil(log2 n) cells per axis and
// c = 30 ln n. Afterwards, uniformly chosen majority labels are flipped until
// |sum chi| <= 1. Deterministic given the seed. Requires n >= 2.
SignedColoring color_self_balancing(const PointSet& ps, std::uint64_t seed);

// Exact max over the family of |sum of chi over the range|, brute force over
// combinatorially distinct candidate ranges. The rect family is evaluated by
// lifting to dominating ranges in 2d dimensions, so it supports d <= 2 only.
long long eval_discrepancy(const PointSet& ps, const SignedColoring& coloring,
                           RangeFamily family);

// Halving-chain output. `error_bound` is the accumulated per-round bound
// sum of (disc_r + [m_r odd]) / m_r, which the halting rule keeps <= eps;
// the true dominating-range fraction error of `points` against the input is
// at most that.
struct EpsSample {
  PointSet points;
  std::size_t rounds = 0;
  double eps_target = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> round_sizes;  // size after each committed round
  std::vector<long long> round_disc;     // committed coloring discrepancy
  double error_bound = 0.0;
};

// ceil((1/eps) * ln(1/eps)^(2d+1)), at least 1.
std::size_t eps_sample_target_size(double eps, int dim);

// Repeatedly colors and keeps the +1 side (the side of size ceil(m/2)) until
// the size reaches eps_sample_target_size or committing another round would
// push the accumulated error bound past eps. Each round takes the best of a
// few reseeded colorings by measured dominating-range discrepancy.
EpsSample build_eps_sample(const PointSet& ps, double eps, std::uint64_t seed);

}  // namespace dks

#endif  // DKS_EPS_SAMPLE_HPP_
