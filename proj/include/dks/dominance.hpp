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

#ifndef DKS_DOMINANCE_HPP_
#define DKS_DOMINANCE_HPP_

#include <cstddef>
#include <vector>

namespace dks {

// Maximum of a signed dominated-weight sum, with a witness corner.
struct DominanceBest {
  double value = 0.0;
  // Witness z as one value per axis; empty means "below every point" (the
  // empty range, value 0).
  std::vector<double> corner;
};

// max over z in R^d of sum_{i : p_i <= z} w_i (coordinatewise closed <=).
// Exact over the candidate grid of per-axis distinct coordinates; the empty
// range contributes 0, so the result is always >= 0 when 0 is attainable.
//
// Sweeps the first axes over distinct values and keeps a best-prefix segment
// tree over the last axis, so runs in O(n log n) for d<=2, O(A1 (n + n log n))
// for d=3, and O(A1 A2 n) for d=4, where Aj counts distinct values on axis j.
// Duplicate-heavy inputs are therefore much cheaper than the worst case.
// All partial sums are plain double additions: integer-valued weights stay
// exact up to 2^53.
DominanceBest max_signed_dominance(int dim, std::size_t n,
                                   const double* coords,
                                   const double* weights);

// Larger absolute value of the two signed runs (weights and negated weights):
// max over z of |sum of dominated weights|.
struct AbsDominanceBest {
  double value = 0.0;
  std::vector<double> corner;
  int sign = +1;  // -1 when the negated run won
};

AbsDominanceBest max_abs_dominance(int dim, std::size_t n,
                                   const double* coords,
                                   const double* weights);

}  // namespace dks

#endif  // DKS_DOMINANCE_HPP_
