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

#include "dks/instability.hpp"

#include <cmath>
#include <stdexcept>

#include "dks/exact.hpp"
#include "dks/rng.hpp"

namespace dks {
namespace {

// Closed orientation-flipped quadrant membership: bit j of mask flips axis j
// from x_j <= z_j to x_j >= z_j.
bool in_quadrant(std::span<const double> x, std::span<const double> z,
                 unsigned mask) {
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (mask & (1u << j)) {
      if (x[j] < z[j]) return false;
    } else {
      if (x[j] > z[j]) return false;
    }
  }
  return true;
}

std::size_t checked_fraction(double x, const char* what) {
  const double r = std::round(x);
  if (r < 1.0 || std::abs(x - r) > 1e-9)
    throw std::invalid_argument(std::string("instability: ") + what);
  return static_cast<std::size_t>(r);
}

}  // namespace

double mdks(const PointSet& P, const PointSet& Q, QuadrantMode mode) {
  if (P.dim() != Q.dim())
    throw std::invalid_argument("mdks: dimension mismatch");
  if (P.size() == 0 || Q.size() == 0)
    throw std::invalid_argument("mdks: point sets must be nonempty");
  const int d = P.dim();
  const unsigned masks = mode == QuadrantMode::kAll ? (1u << d) : 1u;

  double best = 0.0;
  auto consider_anchor = [&](std::span<const double> z) {
    for (unsigned mask = 0; mask < masks; ++mask) {
      std::size_t a = 0, b = 0;
      for (std::size_t i = 0; i < P.size(); ++i)
        if (in_quadrant(P.point(i), z, mask)) ++a;
      for (std::size_t i = 0; i < Q.size(); ++i)
        if (in_quadrant(Q.point(i), z, mask)) ++b;
      const double v = fraction_difference(a, P.size(), b, Q.size());
      if (v > best) best = v;
    }
  };
  for (std::size_t i = 0; i < P.size(); ++i) consider_anchor(P.point(i));
  for (std::size_t i = 0; i < Q.size(); ++i) consider_anchor(Q.point(i));
  return best;
}

InstabilityCase gen_diagonal_case(std::size_t n, double alpha, bool with_dagger,
                                  double jitter, std::uint64_t seed) {
  if (!(alpha > 0.0) || alpha >= 1.0)
    throw std::invalid_argument("gen_diagonal_case: alpha must be in (0,1)");
  if (jitter < 0.0)
    throw std::invalid_argument("gen_diagonal_case: jitter must be >= 0");
  const std::size_t half_block =
      checked_fraction(alpha * static_cast<double>(n) / 2.0,
                       "n*alpha/2 must be a positive integer");
  const std::size_t block = 2 * half_block;  // alpha-fraction of P
  const std::size_t rest = n - block;
  const std::size_t rest_pre = rest / 2;
  const std::size_t rest_post = rest - rest_pre;

  Rng rng(seed);
  constexpr double kGap = 8.0;
  double t = 0.0;
  std::vector<std::vector<double>> prows, qrows;
  auto emit = [&](std::vector<std::vector<double>>& rows) {
    rows.push_back({t, t + rng.uniform(-jitter, jitter)});
    t += 1.0;
  };

  // Balanced prefix, then the Q(alpha/2) P(alpha) Q(alpha/2) block pattern,
  // then a balanced suffix; gaps keep the segments separable.
  for (std::size_t i = 0; i < rest_pre; ++i) {
    emit(prows);
    emit(qrows);
  }
  t += kGap;
  for (std::size_t i = 0; i < half_block; ++i) emit(qrows);
  t += kGap;
  const double p_block_start = t;
  for (std::size_t i = 0; i < block; ++i) emit(prows);
  const double p_block_end = t - 1.0;
  t += kGap;
  for (std::size_t i = 0; i < half_block; ++i) emit(qrows);
  t += kGap;
  for (std::size_t i = 0; i < rest_post; ++i) {
    emit(prows);
    emit(qrows);
  }

  std::size_t dagger_index = prows.size();  // index in P if present
  if (with_dagger)
    prows.push_back({p_block_end + kGap / 2.0, p_block_start - kGap / 2.0});

  InstabilityCase c{PointSet::from_rows(prows, 2), PointSet::from_rows(qrows, 2),
                    with_dagger, alpha, InstabilityConstruction::kDiagonal,
                    0.0, jitter, seed};

  // Off-diagonal quadrants anchored at on-line data points must capture at
  // most one other on-line point, or the construction's premise fails.
  auto count_other = [&](std::span<const double> z, unsigned mask) {
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < prows.size(); ++i) {
      if (with_dagger && i == dagger_index) continue;
      if (in_quadrant(c.P.point(i), z, mask)) ++cnt;
    }
    for (std::size_t i = 0; i < qrows.size(); ++i)
      if (in_quadrant(c.Q.point(i), z, mask)) ++cnt;
    return cnt;  // includes the anchor itself
  };
  for (std::size_t i = 0; i < prows.size() + qrows.size(); ++i) {
    const bool from_p = i < prows.size();
    if (with_dagger && from_p && i == dagger_index) continue;
    const auto z = from_p ? c.P.point(i) : c.Q.point(i - prows.size());
    for (unsigned mask : {1u, 2u})
      if (count_other(z, mask) > 2)
        throw std::invalid_argument(
            "gen_diagonal_case: jitter too large, off-diagonal quadrant "
            "captures more than one point");
  }
  return c;
}

InstabilityCase gen_simplex_case(int d, std::size_t n, double alpha, double eta,
                                 bool with_dagger, std::uint64_t seed) {
  if (d < 3 || d > 4)
    throw std::invalid_argument("gen_simplex_case: d must be 3 or 4");
  if (!(alpha > 0.0) || alpha >= 1.0)
    throw std::invalid_argument("gen_simplex_case: alpha must be in (0,1)");
  if (!(eta > 0.0) || eta >= 0.5)
    throw std::invalid_argument("gen_simplex_case: eta must be in (0, 0.5)");

  const std::size_t per_vertex = checked_fraction(
      alpha * static_cast<double>(n) / d, "alpha*n must be divisible by d");
  const std::size_t per_offset =
      checked_fraction(alpha * static_cast<double>(n) / (d * (d - 1)),
                       "alpha*n must be divisible by d*(d-1)");
  const std::size_t rest = n - per_vertex * d;

  std::vector<std::vector<double>> prows, qrows;
  for (int j = 0; j < d; ++j) {
    std::vector<double> v(d, eta / (d - 1));
    v[j] = 1.0 - eta;
    for (std::size_t i = 0; i < per_vertex; ++i) prows.push_back(v);
    for (int l = 0; l < d; ++l) {
      if (l == j) continue;
      std::vector<double> w(d, 0.0);
      w[j] = 1.0 + eta;
      w[l] = -eta;
      for (std::size_t i = 0; i < per_offset; ++i) qrows.push_back(w);
    }
  }

  // Remaining mass paired identically between P and Q, away from the simplex.
  Rng rng(seed);
  for (std::size_t i = 0; i < rest; ++i) {
    std::vector<double> r(d);
    for (int j = 0; j < d; ++j) r[j] = rng.uniform(2.0, 3.0);
    prows.push_back(r);
    qrows.push_back(r);
  }

  if (with_dagger) prows.push_back(std::vector<double>(d, 0.0));

  return InstabilityCase{PointSet::from_rows(prows, d),
                         PointSet::from_rows(qrows, d),
                         with_dagger,
                         alpha,
                         InstabilityConstruction::kSimplex,
                         eta,
                         0.0,
                         seed};
}

}  // namespace dks
