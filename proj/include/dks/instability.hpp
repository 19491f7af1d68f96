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

#ifndef DKS_INSTABILITY_HPP_
#define DKS_INSTABILITY_HPP_

#include <cstdint>

#include "dks/point_set.hpp"

namespace dks {

enum class QuadrantMode { kSingle, kAll };

// The data-anchored heuristic: max over anchors z in P u Q of
// |fracP - fracQ| on the dominating quadrant at z (kSingle), or additionally
// over all 2^d closed orientation flips of the quadrant (kAll). Always
// mdks(single) <= exact dKS; the kAll family is not contained in the
// dominating family, so no such bound holds for it.
double mdks(const PointSet& P, const PointSet& Q, QuadrantMode mode);

enum class InstabilityConstruction { kDiagonal, kSimplex };

struct InstabilityCase {
  PointSet P;
  PointSet Q;
  bool dagger_present = false;
  double alpha = 0.0;
  InstabilityConstruction construction = InstabilityConstruction::kDiagonal;
  double eta = 0.0;
  double jitter = 0.0;
  std::uint64_t seed = 0;
};

// d=2 near-diagonal construction: n points per side along x=y with the
// alpha-block pattern Q(alpha/2), P(alpha), Q(alpha/2) in the middle and the
// remaining mass interleaved evenly; the extra point p-dagger (appended to P)
// sits off the line so that its second quadrant captures exactly the P block.
// Requires n*alpha/2 to be a positive integer; throws if the jitter lets any
// off-diagonal quadrant anchored at a data point capture more than one other
// point.
InstabilityCase gen_diagonal_case(std::size_t n, double alpha, bool with_dagger,
                                  double jitter, std::uint64_t seed);

// d in {3,4} simplex construction: an alpha/d fraction of P at each simplex
// vertex (eta/(d-1),...,1-eta,...), an alpha/(d(d-1)) fraction of Q at each
// per-vertex offset with 1+eta in the vertex coordinate and -eta in one other,
// the remaining (1-alpha) mass placed at identical paired positions, and
// p-dagger at the origin (appended to P). Requires alpha*n divisible by d and
// by d(d-1).
InstabilityCase gen_simplex_case(int d, std::size_t n, double alpha, double eta,
                                 bool with_dagger, std::uint64_t seed);

}  // namespace dks

#endif  // DKS_INSTABILITY_HPP_
