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

#include "dks/point_set.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dks {

PointSet::PointSet(int dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ < 1) throw std::invalid_argument("PointSet: dim must be >= 1");
  if (coords_.size() % static_cast<std::size_t>(dim_) != 0)
    throw std::invalid_argument("PointSet: coords size not a multiple of dim");
  n_ = coords_.size() / static_cast<std::size_t>(dim_);
  for (double c : coords_)
    if (!std::isfinite(c))
      throw std::invalid_argument("PointSet: coordinates must be finite");

  orders_.resize(dim_);
  for (int j = 0; j < dim_; ++j) {
    auto& ord = orders_[j];
    ord.resize(n_);
    std::iota(ord.begin(), ord.end(), 0u);
    std::stable_sort(ord.begin(), ord.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return coord(a, j) < coord(b, j);
                     });
  }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows,
                             int dim) {
  std::vector<double> flat;
  flat.reserve(rows.size() * static_cast<std::size_t>(dim));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != dim)
      throw std::invalid_argument("PointSet: row arity != dim");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return PointSet(dim, std::move(flat));
}

std::vector<double> PointSet::distinct_values(int axis) const {
  std::vector<double> vals;
  vals.reserve(n_);
  for (std::uint32_t i : orders_[axis]) {
    double v = coord(i, axis);
    if (vals.empty() || vals.back() < v) vals.push_back(v);
  }
  return vals;
}

bool DominatingRange::contains(std::span<const double> p) const {
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (std::isinf(z[j])) continue;  // unbounded axis
    if (p[j] > z[j]) return false;
  }
  return true;
}

bool Rect::contains(std::span<const double> p) const {
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (!std::isinf(lo[j]) && !(p[j] > lo[j])) return false;
    if (!std::isinf(hi[j]) && p[j] > hi[j]) return false;
  }
  return true;
}

std::size_t count_dominated(const PointSet& ps, const DominatingRange& z) {
  if (static_cast<int>(z.z.size()) != ps.dim())
    throw std::invalid_argument("count_dominated: dimension mismatch");
  std::size_t count = 0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (z.contains(ps.point(i))) ++count;
  return count;
}

std::size_t count_rect(const PointSet& ps, const Rect& r) {
  const int d = ps.dim();
  if (static_cast<int>(r.lo.size()) != d ||
      static_cast<int>(r.hi.size()) != d)
    throw std::invalid_argument("count_rect: dimension mismatch");
  for (int j = 0; j < d; ++j) {
    const bool lo_unb = std::isinf(r.lo[j]);
    const bool hi_unb = std::isinf(r.hi[j]);
    if (!lo_unb && !hi_unb && r.lo[j] > r.hi[j])
      throw std::invalid_argument("count_rect: lo must dominate-below hi");
  }

  // Corner v_S uses lo on axes in S. An unbounded-below lo makes the whole
  // corner count zero, so those terms are skipped outright; infinities never
  // meet the subtraction below.
  long long total = 0;
  DominatingRange corner;
  corner.z.resize(d);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    bool degenerate = false;
    for (int j = 0; j < d; ++j) {
      if (mask & (1u << j)) {
        if (std::isinf(r.lo[j])) {
          degenerate = true;
          break;
        }
        corner.z[j] = r.lo[j];
      } else {
        corner.z[j] = r.hi[j];
      }
    }
    if (degenerate) continue;
    const long long sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
    total += sign * static_cast<long long>(count_dominated(ps, corner));
  }
  return static_cast<std::size_t>(total);
}

PointSet apply_monotone(
    const PointSet& ps,
    const std::vector<std::function<double(double)>>& maps) {
  const int d = ps.dim();
  if (static_cast<int>(maps.size()) != d)
    throw std::invalid_argument("apply_monotone: need one map per axis");

  std::vector<double> out(ps.coords().size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (int j = 0; j < d; ++j) {
      double v = maps[j](ps.coord(i, j));
      if (!std::isfinite(v))
        throw std::invalid_argument("apply_monotone: map produced non-finite");
      out[i * static_cast<std::size_t>(d) + j] = v;
    }

  // Strict monotonicity check against the cached sort orders: distinct inputs
  // must stay strictly ordered after mapping.
  for (int j = 0; j < d; ++j) {
    const auto& ord = ps.axis_order(j);
    for (std::size_t k = 1; k < ord.size(); ++k) {
      const double a_old = ps.coord(ord[k - 1], j);
      const double b_old = ps.coord(ord[k], j);
      const double a_new = out[ord[k - 1] * static_cast<std::size_t>(d) + j];
      const double b_new = out[ord[k] * static_cast<std::size_t>(d) + j];
      if (a_old < b_old && !(a_new < b_new))
        throw std::invalid_argument("apply_monotone: map is not strictly increasing");
    }
  }
  return PointSet(d, std::move(out));
}

}  // namespace dks
