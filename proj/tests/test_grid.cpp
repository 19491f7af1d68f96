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

#include <cmath>

#include <stdexcept>

#include <doctest.h>

#include "dks/exact.hpp"
#include "dks/grid.hpp"
#include "dks/rng.hpp"
#include "test_util.hpp"

using namespace dks;

TEST_CASE("build_grid shape and conservation") {
  Rng rng(3);
  const PointSet P = test::random_points(120, 2, rng);
  const PointSet Q = test::random_points(80, 2, rng);

  const StratifiedGrid g = build_grid(P, Q, 0.5);
  CHECK(g.k == 16);  // ceil(4*2/0.5)

  std::size_t sum_p = 0, sum_q = 0;
  for (auto c : g.cells_p) sum_p += c;
  for (auto c : g.cells_q) sum_q += c;
  CHECK(sum_p == P.size());
  CHECK(sum_q == Q.size());

  for (int j = 0; j < 2; ++j)
    CHECK(std::is_sorted(g.breaks[j].begin(), g.breaks[j].end()));

  // Open slabs between consecutive breaks hold at most ceil(m/k) combined
  // points.
  const std::size_t cap = (P.size() + Q.size() + g.k - 1) / g.k;
  for (int j = 0; j < 2; ++j)
    for (std::size_t i = 1; i < g.k; ++i) {
      const double lo = g.breaks[j][i - 1], hi = g.breaks[j][i];
      std::size_t cnt = 0;
      for (std::size_t t = 0; t < P.size(); ++t)
        if (P.coord(t, j) > lo && P.coord(t, j) < hi) ++cnt;
      for (std::size_t t = 0; t < Q.size(); ++t)
        if (Q.coord(t, j) > lo && Q.coord(t, j) < hi) ++cnt;
      CHECK(cnt <= cap);
    }

  CHECK_THROWS_AS(build_grid(P, Q, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(P, PointSet(2, {}), 0.5), std::invalid_argument);
}

TEST_CASE("cells resolve duplicate-coordinate groups when k >= n") {
  const PointSet P = PointSet::from_rows({{0.1, 0.1}, {0.1, 0.1}, {0.7, 0.3}}, 2);
  const PointSet Q = PointSet::from_rows({{0.4, 0.9}}, 2);
  const StratifiedGrid g = build_grid(P, Q, 0.9);  // k = 9 >= 4 points
  CHECK(g.cells_p[g.cell_index(P.point(0))] == 2);
  CHECK(g.cells_p[g.cell_index(P.point(2))] == 1);
  CHECK(g.cells_q[g.cell_index(Q.point(0))] == 1);
}

TEST_CASE("prefix sums equal count_dominated at break vectors") {
  Rng rng(17);
  for (int it = 0; it < 20; ++it) {
    const int d = 1 + static_cast<int>(rng.below(3));
    const PointSet P = test::random_points(40 + rng.below(40), d, rng);
    const PointSet Q = test::random_lattice_points(30 + rng.below(40), d, 9, rng);
    const StratifiedGrid g = build_grid(P, Q, 0.4);
    const auto pp = prefix_counts(g, true);
    const auto qq = prefix_counts(g, false);
    for (int probe = 0; probe < 30; ++probe) {
      std::vector<std::size_t> idx(d);
      std::size_t flat = 0;
      for (int j = 0; j < d; ++j) {
        idx[j] = rng.below(static_cast<std::uint32_t>(g.k));
        flat = flat * g.k + idx[j];
      }
      const DominatingRange z{g.corner(idx)};
      CHECK(pp[flat] == count_dominated(P, z));
      CHECK(qq[flat] == count_dominated(Q, z));
    }
  }
}

TEST_CASE("grid_dks worked examples") {
  const PointSet P = PointSet::from_rows({{1, 1}, {2, 2}}, 2);
  const PointSet Q = PointSet::from_rows({{1, 2}, {2, 1}}, 2);
  const GridDksResult r = grid_dks(P, Q, 0.25);
  CHECK(r.estimate == 0.5);  // n is tiny, the grid resolves every corner
  CHECK(test::diff_at(P, Q, r.witness) == 0.5);

  CHECK(grid_dks(P, P, 0.25).estimate == 0.0);
}

TEST_CASE("grid approximation bound against the exact value") {
  Rng rng(29);
  for (int it = 0; it < 40; ++it) {
    const int d = 2 + static_cast<int>(rng.below(2));
    const double eps = it % 2 == 0 ? 0.1 : 0.2;
    const PointSet P = test::random_points(200, d, rng);
    const PointSet Q = test::random_points(200, d, rng);
    const double exact = exact_dks(P, Q).value;
    const GridDksResult g = grid_dks(P, Q, eps);
    CHECK(g.estimate <= exact);
    CHECK(exact <= g.estimate + eps);
    CHECK(test::diff_at(P, Q, g.witness) == g.estimate);
  }
}

TEST_CASE("snapping a range down to the grid loses at most eps per set") {
  Rng rng(41);
  const double eps = 0.2;
  const int d = 2;
  const PointSet P = test::random_points(200, d, rng);
  const PointSet Q = test::random_points(200, d, rng);
  const StratifiedGrid g = build_grid(P, Q, eps);
  for (int probe = 0; probe < 300; ++probe) {
    DominatingRange z;
    z.z.resize(d);
    for (int j = 0; j < d; ++j) z.z[j] = rng.uniform(-0.1, 1.1);
    // Snap down: largest break <= z_j per axis; if none the count is 0.
    DominatingRange snapped;
    snapped.z.resize(d);
    bool empty = false;
    for (int j = 0; j < d; ++j) {
      const auto& br = g.breaks[j];
      auto it = std::upper_bound(br.begin(), br.end(), z.z[j]);
      if (it == br.begin()) {
        empty = true;
        break;
      }
      snapped.z[j] = *(it - 1);
    }
    const double fp = static_cast<double>(count_dominated(P, z)) / P.size();
    const double fq = static_cast<double>(count_dominated(Q, z)) / Q.size();
    const double fps =
        empty ? 0.0
              : static_cast<double>(count_dominated(P, snapped)) / P.size();
    const double fqs =
        empty ? 0.0
              : static_cast<double>(count_dominated(Q, snapped)) / Q.size();
    CHECK(fp - fps >= 0.0);
    CHECK(fp - fps <= eps);
    CHECK(fq - fqs >= 0.0);
    CHECK(fq - fqs <= eps);
  }
}
