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
#include "dks/instability.hpp"
#include "dks/rng.hpp"
#include "test_util.hpp"

using namespace dks;

TEST_CASE("mdks basics") {
  Rng rng(12);
  const PointSet P = test::random_points(40, 2, rng);
  CHECK(mdks(P, P, QuadrantMode::kSingle) == 0.0);
  CHECK(mdks(P, P, QuadrantMode::kAll) == 0.0);

  for (int it = 0; it < 40; ++it) {
    const int d = 1 + static_cast<int>(rng.below(3));
    const PointSet A = test::random_points(1 + rng.below(25), d, rng);
    const PointSet B = test::random_lattice_points(1 + rng.below(25), d, 5, rng);
    const double single = mdks(A, B, QuadrantMode::kSingle);
    const double all = mdks(A, B, QuadrantMode::kAll);
    CHECK(single <= all);
    CHECK(single <= exact_dks(A, B).value);
  }
}

TEST_CASE("diagonal construction reproduces the factor-2 gap") {
  const std::size_t n = 400;
  const double alpha = 0.5;
  const double jitter = 1e-6 * (2.0 * n + 32.0);
  const InstabilityCase base = gen_diagonal_case(n, alpha, false, jitter, 3);
  const InstabilityCase dag = gen_diagonal_case(n, alpha, true, jitter, 3);

  CHECK(base.P.size() == n);
  CHECK(base.Q.size() == n);
  CHECK(dag.P.size() == n + 1);

  const double all_base = mdks(base.P, base.Q, QuadrantMode::kAll);
  const double all_dag = mdks(dag.P, dag.Q, QuadrantMode::kAll);
  CHECK(all_base <= alpha / 2 + 4.0 / n);
  CHECK(all_dag >= alpha - 4.0 / n);
  CHECK(all_dag / all_base >= 1.8);

  // The exact distance barely moves when the dagger is added.
  const double ex_base = exact_dks(base.P, base.Q).value;
  const double ex_dag = exact_dks(dag.P, dag.Q).value;
  CHECK(std::abs(ex_dag - ex_base) <= 1.0 / (n + 1));

  CHECK_THROWS_AS(gen_diagonal_case(5, 0.5, false, 0.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_diagonal_case(400, 0.5, false, 10.0, 1),
                  std::invalid_argument);  // jitter breaks the premise
}

namespace {

PointSet negated(const PointSet& ps) {
  std::vector<double> c = ps.coords();
  for (double& x : c) x = -x;
  return PointSet(ps.dim(), std::move(c));
}

// Anchored quadrants in the >= orientation: x >= z maps to -x <= -z.
double mdks_upper_orthant(const PointSet& P, const PointSet& Q) {
  return mdks(negated(P), negated(Q), QuadrantMode::kSingle);
}

}  // namespace

TEST_CASE("simplex construction and its anchored-orthant gap") {
  const int d = 3;
  const std::size_t n = 600;
  const double alpha = 0.6;
  const InstabilityCase base = gen_simplex_case(d, n, alpha, 1e-3, false, 9);
  const InstabilityCase dag = gen_simplex_case(d, n, alpha, 1e-3, true, 9);

  CHECK(base.P.size() == n);
  CHECK(dag.P.size() == n + 1);

  // The dagger's orthant captures the whole alpha of P and none of Q's;
  // without it, orthants anchored at data points reach only one vertex mass,
  // alpha/d. The gap is the headline alpha(d-1)/d.
  const double up_base = mdks_upper_orthant(base.P, base.Q);
  const double up_dag = mdks_upper_orthant(dag.P, dag.Q);
  CHECK(up_dag >= alpha - 2.0 / n);
  CHECK(up_base <= alpha / d + 2.0 / n);
  CHECK(up_dag - up_base >= 0.9 * alpha * (d - 1) / d);

  // The all-orientations statistic is insensitive here: with closed
  // orientation flips, a vertex-anchored mixed quadrant already separates
  // the vertex masses from the offsets, dagger or not.
  const double all_base = mdks(base.P, base.Q, QuadrantMode::kAll);
  const double all_dag = mdks(dag.P, dag.Q, QuadrantMode::kAll);
  CHECK(all_base >= alpha - 2.0 / n);
  CHECK(all_dag >= alpha - 2.0 / n);

  const double ex_base = exact_dks(base.P, base.Q).value;
  const double ex_dag = exact_dks(dag.P, dag.Q).value;
  CHECK(std::abs(ex_dag - ex_base) <= 1.0 / (n + 1));

  // Divisibility preconditions.
  CHECK_THROWS_AS(gen_simplex_case(3, 601, 0.6, 1e-3, false, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_simplex_case(5, 600, 0.6, 1e-3, false, 1),
                  std::invalid_argument);
}

TEST_CASE("mdks can violate the triangle inequality") {
  // Deterministic randomized search over small lattice multisets; the exact
  // dKS inherits the IPM triangle inequality, the anchored heuristic does
  // not, and a witness shows up quickly at this size.
  Rng rng(20260809);
  bool found = false;
  for (int it = 0; it < 20000 && !found; ++it) {
    const std::size_t n = 2 + rng.below(4);
    const PointSet P = test::random_lattice_points(n, 2, 4, rng);
    const PointSet Q = test::random_lattice_points(n, 2, 4, rng);
    const PointSet S = test::random_lattice_points(n, 2, 4, rng);
    const double ps = mdks(P, S, QuadrantMode::kSingle);
    const double pq = mdks(P, Q, QuadrantMode::kSingle);
    const double qs = mdks(Q, S, QuadrantMode::kSingle);
    if (ps > pq + qs + 1e-9) {
      found = true;
      // dKS itself still satisfies the inequality on the same triple.
      CHECK(exact_dks(P, S).value <=
            exact_dks(P, Q).value + exact_dks(Q, S).value + 1e-12);
    }
  }
  CHECK(found);
}
