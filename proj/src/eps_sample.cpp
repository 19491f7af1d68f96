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

#include "dks/eps_sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dks/dominance.hpp"
#include "dks/rng.hpp"

namespace dks {
namespace {

// Coordinate-compressed cell grid used by the walk's prefix statistics.
struct WalkGrid {
  int d;
  std::size_t g;                            // cells per axis
  std::vector<std::vector<double>> breaks;  // [axis][0..g-1]
  std::vector<int> counts;                  // signed cell sums, g^d

  std::size_t bin(int axis, double v) const {
    const auto& b = breaks[axis];
    return static_cast<std::size_t>(
        std::lower_bound(b.begin(), b.end(), v) - b.begin());
  }

  std::size_t cell(std::span<const double> p) const {
    std::size_t flat = 0;
    for (int j = 0; j < d; ++j) flat = flat * g + bin(j, p[j]);
    return flat;
  }

  // Signed count of the dominating prefix box of `flat`, inclusive.
  int prefix_sum(std::size_t flat) const {
    std::vector<std::size_t> hi(d);
    for (int j = d - 1; j >= 0; --j) {
      hi[j] = flat % g;
      flat /= g;
    }
    int total = 0;
    std::vector<std::size_t> idx(d, 0);
    for (;;) {
      std::size_t f = 0;
      for (int j = 0; j < d; ++j) f = f * g + idx[j];
      total += counts[f];
      int j = d - 1;
      while (j >= 0 && ++idx[j] > hi[j]) idx[j--] = 0;
      if (j < 0) break;
    }
    return total;
  }
};

WalkGrid make_walk_grid(const PointSet& ps) {
  WalkGrid w;
  w.d = ps.dim();
  const std::size_t n = ps.size();
  w.g = static_cast<std::size_t>(
      std::max(1.0, std::ceil(std::log2(static_cast<double>(n)))));
  w.breaks.resize(w.d);
  for (int j = 0; j < w.d; ++j) {
    const auto& ord = ps.axis_order(j);
    auto& br = w.breaks[j];
    br.resize(w.g);
    for (std::size_t i = 1; i <= w.g; ++i) {
      std::size_t r = (i * n + w.g - 1) / w.g;
      if (r < 1) r = 1;
      if (r > n) r = n;
      br[i - 1] = ps.coord(ord[r - 1], j);
    }
  }
  std::size_t cells = 1;
  for (int j = 0; j < w.d; ++j) cells *= w.g;
  w.counts.assign(cells, 0);
  return w;
}

}  // namespace

SignedColoring color_self_balancing(const PointSet& ps, std::uint64_t seed) {
  const std::size_t n = ps.size();
  if (n < 2)
    throw std::invalid_argument("color_self_balancing: need at least 2 points");

  Rng rng(seed);
  std::vector<std::uint32_t> arrival(n);
  std::iota(arrival.begin(), arrival.end(), 0u);
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(arrival[i], arrival[rng.below(static_cast<std::uint32_t>(i + 1))]);

  WalkGrid grid = make_walk_grid(ps);
  const double c = 30.0 * std::log(static_cast<double>(n));

  SignedColoring out;
  out.rng_seed = seed;
  out.chi.assign(n, 0);
  for (std::uint32_t i : arrival) {
    const std::size_t cell = grid.cell(ps.point(i));
    const double w = static_cast<double>(grid.prefix_sum(cell));
    const double drift = std::clamp(w / c, -1.0, 1.0);
    const double p_plus = (1.0 - drift) / 2.0;
    const std::int8_t chi = rng.unit() < p_plus ? std::int8_t{1} : std::int8_t{-1};
    out.chi[i] = chi;
    grid.counts[cell] += chi;
  }

  long long total = 0;
  for (std::int8_t c8 : out.chi) total += c8;
  while (total > 1 || total < -1) {
    const std::int8_t majority = total > 0 ? std::int8_t{1} : std::int8_t{-1};
    const std::uint32_t r = rng.below(static_cast<std::uint32_t>(n));
    if (out.chi[r] == majority) {
      out.chi[r] = static_cast<std::int8_t>(-majority);
      total -= 2 * majority;
    }
  }
  return out;
}

long long eval_discrepancy(const PointSet& ps, const SignedColoring& coloring,
                           RangeFamily family) {
  const std::size_t n = ps.size();
  if (coloring.chi.size() != n)
    throw std::invalid_argument("eval_discrepancy: coloring size mismatch");
  if (n > 5000)
    throw std::invalid_argument("eval_discrepancy: input too large for brute force");

  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = coloring.chi[i];

  if (family == RangeFamily::kDominating) {
    const AbsDominanceBest best =
        max_abs_dominance(ps.dim(), n, ps.coords().data(), w.data());
    return std::llround(best.value);
  }

  // Rect family: x in (z',z] iff (x,-x) is dominated by (z,-z') up to the
  // strict/closed boundary, and on a finite candidate grid the two families
  // induce the same subsets, so lift to dominating ranges in 2d dimensions.
  const int d = ps.dim();
  if (d > 2)
    throw std::invalid_argument("eval_discrepancy: rect family supports d <= 2");
  std::vector<double> lifted(n * static_cast<std::size_t>(2 * d));
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) {
      lifted[i * (2 * d) + j] = ps.coord(i, j);
      lifted[i * (2 * d) + d + j] = -ps.coord(i, j);
    }
  const AbsDominanceBest best =
      max_abs_dominance(2 * d, n, lifted.data(), w.data());
  return std::llround(best.value);
}

std::size_t eps_sample_target_size(double eps, int dim) {
  const double inv = 1.0 / eps;
  const double raw = inv * std::pow(std::log(inv), 2 * dim + 1);
  if (!(raw > 1.0)) return 1;
  return static_cast<std::size_t>(std::ceil(raw));
}

EpsSample build_eps_sample(const PointSet& ps, double eps, std::uint64_t seed) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("build_eps_sample: eps must be in (0,1]");

  const int d = ps.dim();
  const std::size_t target = eps_sample_target_size(eps, d);

  EpsSample out{PointSet(d, ps.coords()), 0, eps, seed, {}, {}, 0.0};
  std::vector<double> cur = ps.coords();
  std::size_t m = ps.size();

  constexpr int kColoringAttempts = 5;
  std::size_t round = 0;
  while (m > target && m >= 2) {
    const PointSet stage(d, cur);

    SignedColoring best_chi;
    long long best_disc = -1;
    std::vector<double> w(m);
    for (int attempt = 0; attempt < kColoringAttempts; ++attempt) {
      const std::uint64_t sub =
          derive_seed(seed, (round << 8) | static_cast<std::uint64_t>(attempt));
      SignedColoring chi = color_self_balancing(stage, sub);
      // Same measurement as eval_discrepancy's dominating path, without its
      // brute-force size guard: the halving rule needs it at any m.
      for (std::size_t i = 0; i < m; ++i) w[i] = chi.chi[i];
      const long long disc = std::llround(
          max_abs_dominance(d, m, stage.coords().data(), w.data()).value);
      if (best_disc < 0 || disc < best_disc) {
        best_disc = disc;
        best_chi = std::move(chi);
      }
    }

    const double term =
        (static_cast<double>(best_disc) + (m % 2 == 1 ? 1.0 : 0.0)) /
        static_cast<double>(m);
    if (out.error_bound + term > eps) break;

    // Keep the +1 side, arranged to be the ceil(m/2) side.
    std::size_t plus = 0;
    for (std::int8_t c8 : best_chi.chi)
      if (c8 > 0) ++plus;
    if (plus != (m + 1) / 2)
      for (auto& c8 : best_chi.chi) c8 = static_cast<std::int8_t>(-c8);

    std::vector<double> next;
    next.reserve(((m + 1) / 2) * static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < m; ++i)
      if (best_chi.chi[i] > 0)
        next.insert(next.end(), cur.begin() + i * d, cur.begin() + (i + 1) * d);
    cur = std::move(next);
    m = cur.size() / static_cast<std::size_t>(d);

    out.error_bound += term;
    out.round_sizes.push_back(m);
    out.round_disc.push_back(best_disc);
    ++round;
  }

  out.rounds = round;
  out.points = PointSet(d, std::move(cur));
  return out;
}

}  // namespace dks
