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

#include "dks/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dks {
namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 28;

// Merge of the two cached per-axis orders into one sorted value array.
std::vector<double> merged_axis_values(const PointSet& P, const PointSet& Q,
                                       int axis) {
  const auto& op = P.axis_order(axis);
  const auto& oq = Q.axis_order(axis);
  std::vector<double> out;
  out.reserve(op.size() + oq.size());
  std::size_t i = 0, j = 0;
  while (i < op.size() && j < oq.size()) {
    const double a = P.coord(op[i], axis);
    const double b = Q.coord(oq[j], axis);
    if (a <= b) {
      out.push_back(a);
      ++i;
    } else {
      out.push_back(b);
      ++j;
    }
  }
  for (; i < op.size(); ++i) out.push_back(P.coord(op[i], axis));
  for (; j < oq.size(); ++j) out.push_back(Q.coord(oq[j], axis));
  return out;
}

}  // namespace

std::size_t StratifiedGrid::bin(int axis, double v) const {
  const auto& b = breaks[axis];
  return static_cast<std::size_t>(
      std::lower_bound(b.begin(), b.end(), v) - b.begin());
}

std::size_t StratifiedGrid::cell_index(std::span<const double> p) const {
  std::size_t flat = 0;
  for (int j = 0; j < dim; ++j) flat = flat * k + bin(j, p[j]);
  return flat;
}

std::vector<double> StratifiedGrid::corner(
    const std::vector<std::size_t>& idx) const {
  std::vector<double> z(dim);
  for (int j = 0; j < dim; ++j) z[j] = breaks[j][idx[j]];
  return z;
}

StratifiedGrid build_grid(const PointSet& P, const PointSet& Q, double eps) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("build_grid: eps must be in (0,1]");
  if (P.dim() != Q.dim())
    throw std::invalid_argument("build_grid: dimension mismatch");
  if (P.size() == 0 || Q.size() == 0)
    throw std::invalid_argument("build_grid: point sets must be nonempty");

  StratifiedGrid g;
  g.dim = P.dim();
  g.n_p = P.size();
  g.n_q = Q.size();
  g.k = static_cast<std::size_t>(std::ceil(4.0 * g.dim / eps));

  std::size_t cells = 1;
  for (int j = 0; j < g.dim; ++j) {
    if (cells > kMaxCells / g.k)
      throw std::invalid_argument("build_grid: k^d too large for this eps/d");
    cells *= g.k;
  }

  const std::size_t m = g.n_p + g.n_q;
  g.breaks.resize(g.dim);
  for (int j = 0; j < g.dim; ++j) {
    const std::vector<double> merged = merged_axis_values(P, Q, j);
    auto& br = g.breaks[j];
    br.resize(g.k);
    for (std::size_t i = 1; i <= g.k; ++i) {
      // rank ceil(i*m/k), clamped into the data
      std::size_t r = (i * m + g.k - 1) / g.k;
      if (r < 1) r = 1;
      if (r > m) r = m;
      br[i - 1] = merged[r - 1];
    }
  }

  g.cells_p.assign(cells, 0);
  g.cells_q.assign(cells, 0);
  for (std::size_t i = 0; i < P.size(); ++i) ++g.cells_p[g.cell_index(P.point(i))];
  for (std::size_t i = 0; i < Q.size(); ++i) ++g.cells_q[g.cell_index(Q.point(i))];
  return g;
}

std::vector<std::uint32_t> prefix_counts(const StratifiedGrid& g, bool of_p) {
  std::vector<std::uint32_t> acc = of_p ? g.cells_p : g.cells_q;
  const std::size_t k = g.k;
  // One cumulative pass per axis. For axis j with stride s, every cell whose
  // j-index is nonzero absorbs the cell one step below it.
  std::size_t stride = 1;
  for (int j = g.dim - 1; j >= 0; --j) {
    const std::size_t block = stride * k;
    for (std::size_t base = 0; base < acc.size(); base += block)
      for (std::size_t rep = 1; rep < k; ++rep) {
        const std::size_t lo = base + rep * stride;
        for (std::size_t off = 0; off < stride; ++off)
          acc[lo + off] += acc[lo + off - stride];
      }
    stride = block;
  }
  return acc;
}

GridDksResult grid_dks_on(const StratifiedGrid& g) {
  const std::vector<std::uint32_t> pp = prefix_counts(g, true);
  const std::vector<std::uint32_t> qq = prefix_counts(g, false);
  const long long np = static_cast<long long>(g.n_p);
  const long long nq = static_cast<long long>(g.n_q);

  // All corners are realizable ranges; corners with any zero-count axis
  // prefix contribute value 0, which the initial best already covers via the
  // full-range corner (both fractions 1).
  long long best_key = 0;
  std::size_t best_flat = g.cell_count() - 1;
  for (std::size_t i = 0; i < pp.size(); ++i) {
    long long key = static_cast<long long>(pp[i]) * nq -
                    static_cast<long long>(qq[i]) * np;
    if (key < 0) key = -key;
    if (key > best_key) {
      best_key = key;
      best_flat = i;
    }
  }

  GridDksResult r;
  r.estimate = static_cast<double>(best_key) /
               (static_cast<double>(g.n_p) * static_cast<double>(g.n_q));
  std::vector<std::size_t> idx(g.dim);
  std::size_t rem = best_flat;
  for (int j = g.dim - 1; j >= 0; --j) {
    idx[j] = rem % g.k;
    rem /= g.k;
  }
  r.witness.z = g.corner(idx);
  return r;
}

GridDksResult grid_dks(const PointSet& P, const PointSet& Q, double eps) {
  return grid_dks_on(build_grid(P, Q, eps));
}

}  // namespace dks
