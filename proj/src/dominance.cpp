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

#include "dks/dominance.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace dks {
namespace {

// Segment tree over compressed ranks of one axis. Each node carries the sum
// of its bucket range, the maximum prefix sum ending inside the range, and
// the leaf attaining it. Point adds only, queried at the root.
class PrefixMaxTree {
 public:
  void init(std::size_t leaves) {
    base_ = 1;
    while (base_ < leaves) base_ <<= 1;
    sum_.assign(2 * base_, 0.0);
    best_.assign(2 * base_, 0.0);
    arg_.assign(2 * base_, 0);
  }

  void clear() {
    std::fill(sum_.begin(), sum_.end(), 0.0);
    std::fill(best_.begin(), best_.end(), 0.0);
  }

  void add(std::size_t pos, double w) {
    std::size_t i = base_ + pos;
    sum_[i] += w;
    best_[i] = sum_[i];
    arg_[i] = static_cast<std::uint32_t>(pos);
    for (i >>= 1; i >= 1; i >>= 1) {
      const std::size_t l = 2 * i, r = 2 * i + 1;
      sum_[i] = sum_[l] + sum_[r];
      const double via_right = sum_[l] + best_[r];
      if (best_[l] >= via_right) {
        best_[i] = best_[l];
        arg_[i] = arg_[l];
      } else {
        best_[i] = via_right;
        arg_[i] = arg_[r];
      }
      if (i == 1) break;
    }
  }

  double best() const { return best_[1]; }
  std::uint32_t arg() const { return arg_[1]; }

 private:
  std::size_t base_ = 1;
  std::vector<double> sum_;
  std::vector<double> best_;
  std::vector<std::uint32_t> arg_;
};

struct Engine {
  int d;
  std::size_t n;
  const double* coords;
  const double* w;

  std::vector<std::vector<std::uint32_t>> order;  // per axis, sorted indices
  std::vector<std::vector<std::uint32_t>> rank;   // per axis, point -> rank
  std::vector<std::vector<double>> vals;          // per axis, rank -> value

  PrefixMaxTree tree;
  std::vector<std::uint8_t> act1;
  std::vector<std::uint32_t> act2_mark;
  std::uint32_t sweep_id = 0;

  DominanceBest best;
  std::vector<double> ctx;  // corner under construction, one slot per axis

  double at(std::size_t i, int axis) const {
    return coords[i * static_cast<std::size_t>(d) + axis];
  }

  void compress() {
    order.resize(d);
    rank.resize(d);
    vals.resize(d);
    for (int j = 0; j < d; ++j) {
      auto& ord = order[j];
      ord.resize(n);
      std::iota(ord.begin(), ord.end(), 0u);
      std::sort(ord.begin(), ord.end(), [&](std::uint32_t a, std::uint32_t b) {
        return at(a, j) < at(b, j);
      });
      rank[j].resize(n);
      auto& vl = vals[j];
      vl.clear();
      for (std::uint32_t idx : ord) {
        const double v = at(idx, j);
        if (vl.empty() || vl.back() < v) vl.push_back(v);
        rank[j][idx] = static_cast<std::uint32_t>(vl.size() - 1);
      }
    }
  }

  // Sweep over the last two axes restricted to `active` points; assumes the
  // tree is clear on entry and leaves it clear.
  template <class Pred>
  void sweep_last_two(Pred active) {
    const int a = d - 2, b = d - 1;
    const auto& ord = order[a];
    std::size_t i = 0;
    while (i < n) {
      const std::uint32_t first = ord[i];
      if (!active(first)) {
        ++i;
        continue;
      }
      const double va = at(first, a);
      while (i < n) {
        const std::uint32_t k = ord[i];
        if (!active(k)) {
          ++i;
          continue;
        }
        if (at(k, a) != va) break;
        tree.add(rank[b][k], w[k]);
        ++i;
      }
      if (tree.best() > best.value) {
        best.value = tree.best();
        ctx[a] = va;
        ctx[b] = vals[b][tree.arg()];
        best.corner = ctx;
      }
    }
    tree.clear();
  }

  void run_1d() {
    double running = 0.0;
    const auto& ord = order[0];
    std::size_t i = 0;
    while (i < n) {
      const double v = at(ord[i], 0);
      while (i < n && at(ord[i], 0) == v) {
        running += w[ord[i]];
        ++i;
      }
      if (running > best.value) {
        best.value = running;
        best.corner = {v};
      }
    }
  }

  DominanceBest run() {
    best = DominanceBest{};
    if (n == 0) return best;
    compress();
    ctx.assign(d, 0.0);
    if (d == 1) {
      run_1d();
      return best;
    }
    tree.init(vals[d - 1].size());
    if (d == 2) {
      sweep_last_two([](std::uint32_t) { return true; });
      return best;
    }
    act1.assign(n, 0);
    if (d == 4) act2_mark.assign(n, 0);
    const auto& o0 = order[0];
    std::size_t i = 0;
    while (i < n) {
      const double v0 = at(o0[i], 0);
      while (i < n && at(o0[i], 0) == v0) {
        act1[o0[i]] = 1;
        ++i;
      }
      ctx[0] = v0;
      if (d == 3) {
        sweep_last_two([&](std::uint32_t k) { return act1[k] != 0; });
      } else {
        run_axis1_given_act1();
      }
    }
    return best;
  }

  // d == 4: sweep axis 1 over the act1 prefix, with axis 2/3 handled by
  // sweep_last_two on the doubly-active set.
  void run_axis1_given_act1() {
    ++sweep_id;
    const std::uint32_t id = sweep_id;
    const auto& o1 = order[1];
    std::size_t t = 0;
    while (t < n) {
      const std::uint32_t first = o1[t];
      if (!act1[first]) {
        ++t;
        continue;
      }
      const double v1 = at(first, 1);
      while (t < n) {
        const std::uint32_t k = o1[t];
        if (!act1[k]) {
          ++t;
          continue;
        }
        if (at(k, 1) != v1) break;
        act2_mark[k] = id;
        ++t;
      }
      ctx[1] = v1;
      sweep_last_two(
          [&](std::uint32_t k) { return act1[k] && act2_mark[k] == id; });
    }
  }
};

}  // namespace

DominanceBest max_signed_dominance(int dim, std::size_t n,
                                   const double* coords,
                                   const double* weights) {
  if (dim < 1 || dim > 4)
    throw std::invalid_argument("max_signed_dominance: dim must be in 1..4");
  Engine e;
  e.d = dim;
  e.n = n;
  e.coords = coords;
  e.w = weights;
  return e.run();
}

AbsDominanceBest max_abs_dominance(int dim, std::size_t n,
                                   const double* coords,
                                   const double* weights) {
  DominanceBest pos = max_signed_dominance(dim, n, coords, weights);
  std::vector<double> neg(weights, weights + n);
  for (double& x : neg) x = -x;
  DominanceBest flipped = max_signed_dominance(dim, n, coords, neg.data());

  AbsDominanceBest out;
  if (pos.value >= flipped.value) {
    out.value = pos.value;
    out.corner = std::move(pos.corner);
    out.sign = +1;
  } else {
    out.value = flipped.value;
    out.corner = std::move(flipped.corner);
    out.sign = -1;
  }
  return out;
}

}  // namespace dks
