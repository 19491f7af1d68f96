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

#include "dks/dual.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dks/dominance.hpp"
#include "dks/eps_sample.hpp"
#include "dks/grid.hpp"
#include "dks/rng.hpp"

namespace dks {

WeightedRectSet to_dual(const PointSet& P, const PointSet& Q) {
  if (P.dim() != Q.dim())
    throw std::invalid_argument("to_dual: dimension mismatch");
  if (P.size() == 0 || Q.size() == 0)
    throw std::invalid_argument("to_dual: point sets must be nonempty");
  const int d = P.dim();
  if (d < 2 || d > 4)
    throw std::invalid_argument("to_dual: dim must be in {2,3,4}");

  WeightedRectSet w;
  w.dim = d;
  w.n_p = P.size();
  w.n_q = Q.size();

  w.offset.assign(d, 0.0);
  for (int j = 0; j < d; ++j) {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < P.size(); ++i) lo = std::min(lo, P.coord(i, j));
    for (std::size_t i = 0; i < Q.size(); ++i) lo = std::min(lo, Q.coord(i, j));
    w.offset[j] = 1.0 - lo;
  }

  double hi = 0.0;
  for (int j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < P.size(); ++i)
      hi = std::max(hi, P.coord(i, j) + w.offset[j]);
    for (std::size_t i = 0; i < Q.size(); ++i)
      hi = std::max(hi, Q.coord(i, j) + w.offset[j]);
  }
  w.xi = 2.0 * hi;

  const std::size_t t = P.size() + Q.size();
  w.rects.reserve(t);
  w.weights.reserve(t);
  w.cls.reserve(t);
  w.raw_lo.reserve(t * static_cast<std::size_t>(d));
  auto add = [&](const PointSet& S, std::int8_t cls, double weight) {
    for (std::size_t i = 0; i < S.size(); ++i) {
      Rect r;
      r.lo.resize(d);
      r.hi.assign(d, w.xi);
      for (int j = 0; j < d; ++j) {
        r.lo[j] = S.coord(i, j) + w.offset[j];
        w.raw_lo.push_back(S.coord(i, j));
      }
      w.rects.push_back(std::move(r));
      w.weights.push_back(weight);
      w.cls.push_back(cls);
    }
  };
  add(P, +1, 1.0 / static_cast<double>(P.size()));
  add(Q, -1, -1.0 / static_cast<double>(Q.size()));
  return w;
}

MaxDepthResult max_depth_point(const WeightedRectSet& w) {
  const std::size_t t = w.rects.size();
  if (t == 0) throw std::invalid_argument("max_depth_point: no rectangles");
  const int d = w.dim;

  // Sweep on the untranslated corners when available; the translation
  // preserves order but not bit-exact round trips.
  const bool raw = w.raw_lo.size() == t * static_cast<std::size_t>(d);
  std::vector<double> corners(t * static_cast<std::size_t>(d));
  if (raw) {
    corners = w.raw_lo;
  } else {
    for (std::size_t i = 0; i < t; ++i)
      for (int j = 0; j < d; ++j) corners[i * d + j] = w.rects[i].lo[j];
  }

  // With provenance, weights are scaled to the integers +|Q| / -|P| so every
  // comparison in the sweep is exact; one final division restores the value.
  const bool scaled = w.n_p > 0 && w.n_q > 0 && w.cls.size() == t;
  std::vector<double> weights(t);
  for (std::size_t i = 0; i < t; ++i)
    weights[i] = scaled ? (w.cls[i] > 0 ? static_cast<double>(w.n_q)
                                        : -static_cast<double>(w.n_p))
                        : w.weights[i];

  AbsDominanceBest best = max_abs_dominance(d, t, corners.data(), weights.data());

  MaxDepthResult out;
  out.sign = best.sign;
  out.value = scaled ? best.value / (static_cast<double>(w.n_p) *
                                     static_cast<double>(w.n_q))
                     : best.value;
  if (best.corner.empty()) {
    // Max attained outside every rectangle: any point below all lower
    // corners works.
    out.z.assign(d, 0.0);
    for (int j = 0; j < d; ++j) {
      double lo = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < t; ++i)
        lo = std::min(lo, corners[i * d + j]);
      out.z[j] = lo - 1.0;
    }
  } else {
    out.z = std::move(best.corner);
  }
  if (!raw && !w.offset.empty())
    for (int j = 0; j < d; ++j) out.z[j] -= w.offset[j];
  return out;
}

PipelineResult approx_dks_pipeline(const PointSet& P, const PointSet& Q,
                                   double eps, std::uint64_t seed) {
  if (P.dim() != Q.dim())
    throw std::invalid_argument("approx_dks_pipeline: dimension mismatch");
  const int d = P.dim();
  if (d < 2 || d > 4)
    throw std::invalid_argument("approx_dks_pipeline: dim must be in {2,3,4}");
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("approx_dks_pipeline: eps must be in (0,1]");

  PipelineResult out;
  if (d == 2) {
    const GridDksResult g = grid_dks(P, Q, eps);
    out.estimate = g.estimate;
    out.witness = g.witness.z;
    out.sample_p = P.size();
    out.sample_q = Q.size();
    return out;
  }

  const double eps3 = eps / 3.0;
  const EpsSample sp = build_eps_sample(P, eps3, derive_seed(seed, 0xA11CE));
  const EpsSample sq = build_eps_sample(Q, eps3, derive_seed(seed, 0xB0B));
  const WeightedRectSet dual = to_dual(sp.points, sq.points);
  MaxDepthResult md = max_depth_point(dual);

  out.estimate = md.value;
  out.witness = std::move(md.z);
  out.sample_p = sp.points.size();
  out.sample_q = sq.points.size();
  out.rounds_p = sp.rounds;
  out.rounds_q = sq.rounds;
  return out;
}

}  // namespace dks
