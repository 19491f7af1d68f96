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

#ifndef DKS_POINT_SET_HPP_
#define DKS_POINT_SET_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dks {

// A finite multiset of d-dimensional points, each carrying weight 1/n.
// Immutable after construction; per-axis sort orders are computed eagerly in
// the constructor so shared instances are race-free.
//
// Coordinates must be finite (no NaN/infinity). Duplicate points are legal
// and counted with multiplicity.
class PointSet {
 public:
  // `coords` is row-major: point i occupies [i*dim, (i+1)*dim).
  PointSet(int dim, std::vector<double> coords);

  static PointSet from_rows(const std::vector<std::vector<double>>& rows,
                            int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return n_; }

  double coord(std::size_t i, int axis) const {
    return coords_[i * static_cast<std::size_t>(dim_) + axis];
  }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dim_),
            static_cast<std::size_t>(dim_)};
  }
  const std::vector<double>& coords() const { return coords_; }

  // Indices of points sorted (stably) by coordinate on `axis`, nondecreasing.
  const std::vector<std::uint32_t>& axis_order(int axis) const {
    return orders_[axis];
  }

  // Ascending distinct coordinate values on `axis`.
  std::vector<double> distinct_values(int axis) const;

 private:
  int dim_;
  std::size_t n_;
  std::vector<double> coords_;
  std::vector<std::vector<std::uint32_t>> orders_;
};

// A dominating range R_z = {x | x <= z coordinatewise}, closed on every axis.
// A coordinate may be +infinity, which marks that axis as unbounded; such
// sentinels never enter arithmetic, only an explicit unbounded branch.
struct DominatingRange {
  std::vector<double> z;

  bool contains(std::span<const double> p) const;
};

// Half-open box {x | lo < x <= hi}: strict below, closed above. A lo
// coordinate may be -infinity (unbounded below), a hi coordinate +infinity.
struct Rect {
  std::vector<double> lo;
  std::vector<double> hi;

  bool contains(std::span<const double> p) const;
};

// |{p in ps : p <= z}|, ties included. Throws on dimension mismatch.
std::size_t count_dominated(const PointSet& ps, const DominatingRange& z);

// |{p in ps : r.lo < p <= r.hi}| by inclusion-exclusion over the 2^d corners
// of r: sum over S subset of axes of (-1)^|S| * count_dominated(v_S), where
// v_S takes lo on axes in S and hi elsewhere. Throws on dimension mismatch or
// lo !<= hi.
std::size_t count_rect(const PointSet& ps, const Rect& r);

// Applies one strictly increasing map per axis. The result keeps n, d and the
// per-axis sort orders of the input. Throws if any map inverts the sorted
// order, collapses distinct values, or produces a non-finite coordinate.
PointSet apply_monotone(const PointSet& ps,
                        const std::vector<std::function<double(double)>>& maps);

}  // namespace dks

#endif  // DKS_POINT_SET_HPP_
