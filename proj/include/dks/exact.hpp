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

#ifndef DKS_EXACT_HPP_
#define DKS_EXACT_HPP_

#include <cstddef>

#include "dks/point_set.hpp"

namespace dks {

// Exact dKS value and a maximizing corner.
struct DksResult {
  double value = 0.0;
  DominatingRange witness;
};

// |a/nP - b/nQ| computed as |a*nQ - b*nP| / (nP*nQ): one rounding step, so
// equal integer counts give bitwise-equal values across every code path that
// uses this helper.
inline double fraction_difference(std::size_t a, std::size_t n_p,
                                  std::size_t b, std::size_t n_q) {
  const long long key = static_cast<long long>(a) * static_cast<long long>(n_q) -
                        static_cast<long long>(b) * static_cast<long long>(n_p);
  const long long abs_key = key < 0 ? -key : key;
  return static_cast<double>(abs_key) /
         (static_cast<double>(n_p) * static_cast<double>(n_q));
}

// dKS(P,Q) = max over z of |fracP(R_z) - fracQ(R_z)|, maximized over the grid
// of per-axis distinct coordinates of P u Q (which covers every
// combinatorially distinct dominating range). Fixes the first d-1 coordinates
// and sweeps the last axis in sorted order with O(1) count updates per point,
// so O(d * n^d) worst case and O(n) memory; duplicate coordinate values
// shrink the fixed-coordinate grid accordingly. |P| and |Q| may differ.
//
// Throws on empty inputs or dimension mismatch.
DksResult exact_dks(const PointSet& P, const PointSet& Q);

// Independent oracle: evaluates every candidate corner (per-axis distinct
// values plus a sentinel above the maximum) with a direct per-point
// membership scan, O(n^(d+1)). Shares no code with exact_dks's sweep.
DksResult brute_force_dks(const PointSet& P, const PointSet& Q);

}  // namespace dks

#endif  // DKS_EXACT_HPP_
