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

#ifndef DKS_TWO_SAMPLE_HPP_
#define DKS_TWO_SAMPLE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "dks/point_set.hpp"

namespace dks {

enum class ThresholdFormula { kLogFormula, kAbsolute2205d };

// Decision threshold eps(n, delta) for the level-delta test, the minimum of
// two closed forms (all logs natural):
//   log form:  d=2  sqrt(4 ln(2n)/n * ln(1/delta))
//              d=3  sqrt(6 ln(3n)/n * ln(1/delta))
//              d=4  sqrt(8 ln(3n)/n * ln(1/delta))
//   absolute:  sqrt(2205 d / n * ln(1/delta))
// The absolute form only wins for astronomically large n (beyond 10^478 at
// d=2). condition_ok reports the validity condition of the log-form
// derivation, ln(beta_d^2 n / alpha_d) ln(1/delta) < sqrt(n / alpha_d) with
// (alpha, beta) = (4,8), (6,18), (8,24) for d = 2, 3, 4.
struct Threshold {
  double eps = 0.0;
  ThresholdFormula formula = ThresholdFormula::kLogFormula;  // the winner
  double log_candidate = 0.0;
  double abs_candidate = 0.0;
  std::size_t n = 0;
  double delta = 0.0;
  int d = 0;
  bool condition_ok = false;
};

// Requires n >= 2, delta in (0,1), d in {2,3,4}.
Threshold threshold(std::size_t n, double delta, int d);

// Same computation with the absolute constant injected, for exercising the
// min-rule comparison branch at reachable n.
Threshold threshold_with_constants(std::size_t n, double delta, int d,
                                   double abs_constant);

// Runs the estimator max(1, ceil(2 ln(1/delta))) times on independently
// derived seeds and returns the median (mean of the middle two for an even
// count).
double median_amplify(const std::function<double(std::uint64_t)>& estimator,
                      double delta, std::uint64_t seed);

enum class EstimatorKind { kGrid, kPipeline, kExact };

struct TestReport {
  double statistic = 0.0;
  Threshold threshold;
  bool reject = false;
  int d = 0;
  std::size_t n = 0;
  double delta = 0.0;
  EstimatorKind estimator = EstimatorKind::kGrid;
  std::vector<std::uint64_t> seeds;
  double runtime_ms = 0.0;
};

// Level-delta two-sample test: statistic from grid_dks (d=2) or
// approx_dks_pipeline (d=3,4) at internal accuracy eps(n,delta), median
// amplified; rejects H0 iff the statistic reaches the threshold. Requires
// |X| == |Y| (the derivation assumes equal sizes) and d in {2,3,4}.
TestReport two_sample_test(const PointSet& X, const PointSet& Y, double delta,
                           std::uint64_t seed);

}  // namespace dks

#endif  // DKS_TWO_SAMPLE_HPP_
