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

#include "dks/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dks {
namespace {

void check_pair(const PointSet& P, const PointSet& Q) {
  if (P.dim() != Q.dim())
    throw std::invalid_argument("dks: dimension mismatch between P and Q");
  if (P.size() == 0 || Q.size() == 0)
    throw std::invalid_argument("dks: point sets must be nonempty");
}

// Combined multiset of P u Q with signed integer deltas: a P point moves the
// scaled difference a*|Q| - b*|P| by +|Q|, a Q point by -|P|. Maximizing
// |delta sum| over corners and dividing once by |P||Q| keeps every comparison
// in exact integer arithmetic.
struct Combined {
  int d;
  std::size_t m;
  std::size_t n_p, n_q;
  std::vector<double> coords;      // row-major, m x d
  std::vector<long long> delta;

  double at(std::size_t i, int axis) const {
    return coords[i * static_cast<std::size_t>(d) + axis];
  }
};

Combined combine(const PointSet& P, const PointSet& Q) {
  Combined c;
  c.d = P.dim();
  c.n_p = P.size();
  c.n_q = Q.size();
  c.m = c.n_p + c.n_q;
  c.coords.reserve(c.m * c.d);
  c.coords.insert(c.coords.end(), P.coords().begin(), P.coords().end());
  c.coords.insert(c.coords.end(), Q.coords().begin(), Q.coords().end());
  c.delta.assign(c.m, 0);
  for (std::size_t i = 0; i < c.n_p; ++i)
    c.delta[i] = static_cast<long long>(c.n_q);
  for (std::size_t i = c.n_p; i < c.m; ++i)
    c.delta[i] = -static_cast<long long>(c.n_p);
  return c;
}

std::vector<double> distinct_axis_values(const Combined& c, int axis) {
  std::vector<double> v(c.m);
  for (std::size_t i = 0; i < c.m; ++i) v[i] = c.at(i, axis);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

DksResult exact_dks(const PointSet& P, const PointSet& Q) {
  check_pair(P, Q);
  const Combined c = combine(P, Q);
  const int d = c.d;
  const std::size_t m = c.m;

  // Points arranged in last-axis sorted order; the sweep scans these arrays
  // once per fixed prefix.
  std::vector<std::uint32_t> ord(m);
  std::iota(ord.begin(), ord.end(), 0u);
  const int last = d - 1;
  std::sort(ord.begin(), ord.end(), [&](std::uint32_t a, std::uint32_t b) {
    return c.at(a, last) < c.at(b, last);
  });
  std::vector<double> last_val(m);
  std::vector<long long> delta(m);
  // prefix-axis coordinates in sweep order, axis-major
  std::vector<double> pre((d - 1) * m);
  for (std::size_t t = 0; t < m; ++t) {
    const std::uint32_t i = ord[t];
    last_val[t] = c.at(i, last);
    delta[t] = c.delta[i];
    for (int j = 0; j + 1 < d; ++j) pre[j * m + t] = c.at(i, j);
  }

  long long best_key = 0;
  std::vector<double> best_corner(d, 0.0);
  bool have_best = false;

  if (d == 1) {
    long long run = 0;
    for (std::size_t t = 0; t < m; ++t) {
      run += delta[t];
      if (t + 1 < m && last_val[t + 1] == last_val[t]) continue;
      const long long key = run < 0 ? -run : run;
      if (!have_best || key > best_key) {
        best_key = key;
        best_corner[0] = last_val[t];
        have_best = true;
      }
    }
  } else {
    std::vector<std::vector<double>> axis_vals(d - 1);
    for (int j = 0; j + 1 < d; ++j) axis_vals[j] = distinct_axis_values(c, j);

    std::vector<std::size_t> idx(d - 1, 0);
    std::vector<double> v(d - 1);
    for (;;) {
      for (int j = 0; j + 1 < d; ++j) v[j] = axis_vals[j][idx[j]];

      long long run = 0;
      for (std::size_t t = 0; t < m; ++t) {
        bool inside = true;
        for (int j = 0; j + 1 < d; ++j)
          if (pre[j * m + t] > v[j]) {
            inside = false;
            break;
          }
        if (inside) run += delta[t];
        if (t + 1 < m && last_val[t + 1] == last_val[t]) continue;
        const long long key = run < 0 ? -run : run;
        if (!have_best || key > best_key) {
          best_key = key;
          for (int j = 0; j + 1 < d; ++j) best_corner[j] = v[j];
          best_corner[last] = last_val[t];
          have_best = true;
        }
      }

      int j = d - 2;
      while (j >= 0 && ++idx[j] == axis_vals[j].size()) idx[j--] = 0;
      if (j < 0) break;
    }
  }

  DksResult r;
  r.value = static_cast<double>(best_key) /
            (static_cast<double>(c.n_p) * static_cast<double>(c.n_q));
  r.witness.z = std::move(best_corner);
  return r;
}

DksResult brute_force_dks(const PointSet& P, const PointSet& Q) {
  check_pair(P, Q);
  const int d = P.dim();
  const Combined c = combine(P, Q);

  // Candidate corners: per-axis distinct values plus one sentinel above the
  // maximum (the unbounded axis), evaluated by direct membership tests.
  std::vector<std::vector<double>> cand(d);
  for (int j = 0; j < d; ++j) {
    cand[j] = distinct_axis_values(c, j);
    cand[j].push_back(std::numeric_limits<double>::infinity());
  }

  double best = -1.0;
  std::vector<double> best_corner(d, 0.0);
  std::vector<std::size_t> idx(d, 0);
  DominatingRange z;
  z.z.resize(d);
  for (;;) {
    for (int j = 0; j < d; ++j) z.z[j] = cand[j][idx[j]];
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < P.size(); ++i)
      if (z.contains(P.point(i))) ++a;
    for (std::size_t i = 0; i < Q.size(); ++i)
      if (z.contains(Q.point(i))) ++b;
    const double diff =
        std::abs(static_cast<double>(a) / static_cast<double>(P.size()) -
                 static_cast<double>(b) / static_cast<double>(Q.size()));
    if (diff > best) {
      best = diff;
      best_corner = z.z;
    }
    int j = d - 1;
    while (j >= 0 && ++idx[j] == cand[j].size()) idx[j--] = 0;
    if (j < 0) break;
  }

  DksResult r;
  r.value = best;
  r.witness.z = std::move(best_corner);
  return r;
}

}  // namespace dks
