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

#include <vector>

#include <stdexcept>

#include <doctest.h>

#include "dks/dominance.hpp"
#include "dks/rng.hpp"
#include "test_util.hpp"

using namespace dks;

namespace {

// Independent reference: enumerate every candidate corner and score by direct
// membership.
DominanceBest brute_max(int d, std::size_t n, const std::vector<double>& coords,
                        const std::vector<double>& w) {
  std::vector<std::vector<double>> cand(d);
  for (int j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < n; ++i) cand[j].push_back(coords[i * d + j]);
    std::sort(cand[j].begin(), cand[j].end());
    cand[j].erase(std::unique(cand[j].begin(), cand[j].end()), cand[j].end());
  }
  DominanceBest best;  // empty corner, value 0
  std::vector<std::size_t> idx(d, 0);
  if (n == 0) return best;
  for (;;) {
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool in = true;
      for (int j = 0; j < d; ++j)
        if (coords[i * d + j] > cand[j][idx[j]]) {
          in = false;
          break;
        }
      if (in) sum += w[i];
    }
    if (sum > best.value) {
      best.value = sum;
      best.corner.resize(d);
      for (int j = 0; j < d; ++j) best.corner[j] = cand[j][idx[j]];
    }
    int j = d - 1;
    while (j >= 0 && ++idx[j] == cand[j].size()) idx[j--] = 0;
    if (j < 0) break;
  }
  return best;
}

}  // namespace

TEST_CASE("sweep matches brute force on random weighted instances") {
  Rng rng(99);
  for (int it = 0; it < 400; ++it) {
    const int d = 1 + static_cast<int>(rng.below(4));
    const std::size_t n = 1 + rng.below(30);
    std::vector<double> coords(n * d);
    for (double& c : coords)
      c = it % 2 == 0 ? rng.uniform(0, 1)
                      : static_cast<double>(rng.below(4)) / 4.0;
    std::vector<double> w(n);
    for (double& x : w)
      x = static_cast<double>(static_cast<int>(rng.below(9)) - 4);  // -4..4

    const DominanceBest got = max_signed_dominance(d, n, coords.data(), w.data());
    const DominanceBest want = brute_max(d, n, coords, w);
    CHECK(got.value == want.value);

    // The witness reproduces the value.
    if (!got.corner.empty()) {
      double sum = 0;
      for (std::size_t i = 0; i < n; ++i) {
        bool in = true;
        for (int j = 0; j < d; ++j)
          if (coords[i * d + j] > got.corner[j]) {
            in = false;
            break;
          }
        if (in) sum += w[i];
      }
      CHECK(sum == got.value);
    } else {
      CHECK(got.value == 0.0);
    }

    const AbsDominanceBest abs_got =
        max_abs_dominance(d, n, coords.data(), w.data());
    std::vector<double> neg(w);
    for (double& x : neg) x = -x;
    const DominanceBest want_neg = brute_max(d, n, coords, neg);
    CHECK(abs_got.value == std::max(want.value, want_neg.value));
  }
}

TEST_CASE("sweep handles all-negative weights via the empty range") {
  const std::vector<double> coords{0.5, 0.5, 0.25, 0.75};
  const std::vector<double> w{-1.0, -2.0};
  const DominanceBest best = max_signed_dominance(2, 2, coords.data(), w.data());
  CHECK(best.value == 0.0);
  CHECK(best.corner.empty());
}

TEST_CASE("dimension guard") {
  const std::vector<double> coords(5, 0.0);
  const std::vector<double> w(1, 1.0);
  CHECK_THROWS_AS(max_signed_dominance(5, 1, coords.data(), w.data()),
                  std::invalid_argument);
}
