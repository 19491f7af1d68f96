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

#ifndef DKS_DUAL_HPP_
#define DKS_DUAL_HPP_

#include <cstdint>
#include <vector>

#include "dks/point_set.hpp"

namespace dks {

// Dual form of the dKS maximization: every point x of P u Q becomes the
// rectangle r_x = [x, xi]^d with weight +1/|P| (from P) or -1/|Q| (from Q),
// after translating all coordinates so each axis minimum is 1 and setting
// xi to twice the largest coordinate. Then z lies in r_x iff x <= z, so the
// signed depth at z equals fracP(R_z) - fracQ(R_z).
struct WeightedRectSet {
  int dim = 0;
  double xi = 0.0;
  std::vector<Rect> rects;
  std::vector<double> weights;

  // Provenance kept for exact arithmetic and exact witnesses. cls is +1 for
  // P rectangles, -1 for Q; when n_p/n_q are zero the set was built by hand
  // and `weights` is authoritative. raw_lo holds the untranslated lower
  // corners (t x d, row-major): the depth sweep runs on these, since
  // translating and untranslating a coordinate need not round-trip exactly.
  std::vector<std::int8_t> cls;
  std::size_t n_p = 0, n_q = 0;
  std::vector<double> offset;
  std::vector<double> raw_lo;

  // Dual containment is closed on both sides (x <= z <= xi), unlike the
  // half-open core Rect. `z` is in dual coordinates.
  bool contains_point(std::size_t i, std::span<const double> z) const {
    for (int j = 0; j < dim; ++j)
      if (z[j] < rects[i].lo[j] || z[j] > rects[i].hi[j]) return false;
    return true;
  }
};

// Throws on dimension mismatch, empty inputs, or d outside {2,3,4}.
WeightedRectSet to_dual(const PointSet& P, const PointSet& Q);

struct MaxDepthResult {
  double value = 0.0;
  // A point attaining max |signed depth|, in the coordinates of the inputs
  // that produced the dual (translation removed).
  std::vector<double> z;
  int sign = +1;  // -1 when the Q-heavy direction achieved the max
};

// Maximum over z of |sum of weights of rectangles containing z|, exact over
// the grid of per-axis lower corner coordinates (depth only changes there).
// Both signs are tried. The sweep is the one from max_signed_dominance, so
// worst-case O(t^(d-1) log t) with the distinct-value compression making
// duplicate-heavy inputs far cheaper; Chan's O(t^(d/2)) recursion is
// deliberately not used.
MaxDepthResult max_depth_point(const WeightedRectSet& w);

struct PipelineResult {
  double estimate = 0.0;
  std::vector<double> witness;
  std::size_t sample_p = 0, sample_q = 0;
  std::size_t rounds_p = 0, rounds_q = 0;
};

// The d=3,4 approximation pipeline: eps/3-samples of P and Q, dualize, take
// the max-depth point. Guarantees |estimate - dKS(P,Q)| <= eps. d=2 routes
// to grid_dks.
PipelineResult approx_dks_pipeline(const PointSet& P, const PointSet& Q,
                                   double eps, std::uint64_t seed);

}  // namespace dks

#endif  // DKS_DUAL_HPP_
