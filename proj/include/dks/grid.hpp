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

#ifndef DKS_GRID_HPP_
#define DKS_GRID_HPP_

#include <cstdint>
#include <vector>

#include "dks/point_set.hpp"

namespace dks {

// Stratified grid over the combined multiset P u Q: k breakpoints per axis
// chosen at evenly spaced ranks of the combined sorted order, and one count
// cell per corner for each of P and Q.
//
// Invariants: breaks are nondecreasing per axis; cell counts sum to |P| and
// |Q|; every open slab between consecutive breaks holds at most
// ceil((|P|+|Q|)/k) combined points.
struct StratifiedGrid {
  int dim = 0;
  std::size_t k = 0;
  std::size_t n_p = 0, n_q = 0;
  std::vector<std::vector<double>> breaks;  // [axis][0..k-1]
  std::vector<std::uint32_t> cells_p;       // k^d, axis 0 slowest
  std::vector<std::uint32_t> cells_q;

  std::size_t cell_count() const { return cells_p.size(); }

  // Per-axis bin of a value: index of the first breakpoint >= v. Every data
  // value is <= the top break, so the result is always < k.
  std::size_t bin(int axis, double v) const;

  // Flat cell index of a point (row-major, axis 0 slowest).
  std::size_t cell_index(std::span<const double> p) const;

  // Breakpoint vector of the corner with the given per-axis indices.
  std::vector<double> corner(const std::vector<std::size_t>& idx) const;
};

// Builds the grid with k = ceil(4d/eps) breakpoints per axis and bins every
// point by binary search per axis: O(d n log n + k^d). Throws if eps is
// outside (0,1], an input is empty, or k^d would be unreasonably large.
StratifiedGrid build_grid(const PointSet& P, const PointSet& Q, double eps);

// d-dimensional inclusive prefix sums of one side's cells; entry i then
// equals count_dominated at the break vector of corner i.
std::vector<std::uint32_t> prefix_counts(const StratifiedGrid& g, bool of_p);

struct GridDksResult {
  double estimate = 0.0;
  DominatingRange witness;
};

// The eps-approximate dKS: max over the k^d grid corners of
// |prefixP/|P| - prefixQ/|Q||. Grid corners are genuine ranges, so
// estimate <= exact dKS, and snapping any z down to the grid loses at most
// eps, so exact <= estimate + eps.
GridDksResult grid_dks(const PointSet& P, const PointSet& Q, double eps);

// Same maximization on an already-built grid.
GridDksResult grid_dks_on(const StratifiedGrid& g);

}  // namespace dks

#endif  // DKS_GRID_HPP_
