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

#include "dks/two_sample.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dks/dual.hpp"
#include "dks/grid.hpp"
#include "dks/rng.hpp"

namespace dks {

Threshold threshold_with_constants(std::size_t n, double delta, int d,
                                   double abs_constant) {
  if (n < 2) throw std::invalid_argument("threshold: n must be >= 2");
  if (!(delta > 0.0) || !(delta < 1.0))
    throw std::invalid_argument("threshold: delta must be in (0,1)");
  if (d < 2 || d > 4)
    throw std::invalid_argument("threshold: d must be in {2,3,4}");

  const double nn = static_cast<double>(n);
  const double lod = std::log(1.0 / delta);

  double alpha_d = 0.0, beta_d = 0.0, log_arg = 0.0;
  switch (d) {
    case 2:
      alpha_d = 4.0;
      beta_d = 8.0;
      log_arg = 2.0 * nn;
      break;
    case 3:
      alpha_d = 6.0;
      beta_d = 18.0;
      log_arg = 3.0 * nn;
      break;
    default:
      alpha_d = 8.0;
      beta_d = 24.0;
      log_arg = 3.0 * nn;
      break;
  }

  Threshold t;
  t.n = n;
  t.delta = delta;
  t.d = d;
  t.log_candidate = std::sqrt(alpha_d * std::log(log_arg) / nn * lod);
  t.abs_candidate = std::sqrt(abs_constant * d / nn * lod);
  if (t.log_candidate <= t.abs_candidate) {
    t.eps = t.log_candidate;
    t.formula = ThresholdFormula::kLogFormula;
  } else {
    t.eps = t.abs_candidate;
    t.formula = ThresholdFormula::kAbsolute2205d;
  }
  t.condition_ok =
      std::log(beta_d * beta_d * nn / alpha_d) * lod < std::sqrt(nn / alpha_d);
  return t;
}

Threshold threshold(std::size_t n, double delta, int d) {
  return threshold_with_constants(n, delta, d, 2205.0);
}

double median_amplify(const std::function<double(std::uint64_t)>& estimator,
                      double delta, std::uint64_t seed) {
  if (!(delta > 0.0) || !(delta < 1.0))
    throw std::invalid_argument("median_amplify: delta must be in (0,1)");
  const int runs = std::max(
      1, static_cast<int>(std::ceil(2.0 * std::log(1.0 / delta))));
  std::vector<double> vals(runs);
  for (int i = 0; i < runs; ++i)
    vals[i] = estimator(derive_seed(seed, 0x3D5 + static_cast<std::uint64_t>(i)));
  std::sort(vals.begin(), vals.end());
  if (runs % 2 == 1) return vals[runs / 2];
  return 0.5 * (vals[runs / 2 - 1] + vals[runs / 2]);
}

TestReport two_sample_test(const PointSet& X, const PointSet& Y, double delta,
                           std::uint64_t seed) {
  if (X.dim() != Y.dim())
    throw std::invalid_argument("two_sample_test: dimension mismatch");
  if (X.size() != Y.size())
    throw std::invalid_argument(
        "two_sample_test: samples must have equal size (m = n)");
  const int d = X.dim();
  if (d < 2 || d > 4)
    throw std::invalid_argument("two_sample_test: d must be in {2,3,4}");

  const auto start = std::chrono::steady_clock::now();

  TestReport rep;
  rep.d = d;
  rep.n = X.size();
  rep.delta = delta;
  rep.threshold = threshold(X.size(), delta, d);
  rep.estimator = d == 2 ? EstimatorKind::kGrid : EstimatorKind::kPipeline;

  // Internal estimator accuracy equals the decision threshold, capped at 1
  // (a threshold above 1 can never reject since dKS <= 1).
  const double eps_internal = std::min(rep.threshold.eps, 1.0);
  auto estimate = [&](std::uint64_t s) {
    rep.seeds.push_back(s);
    if (d == 2) return grid_dks(X, Y, eps_internal).estimate;
    return approx_dks_pipeline(X, Y, eps_internal, s).estimate;
  };
  rep.statistic = median_amplify(estimate, delta, seed);
  rep.reject = rep.statistic >= rep.threshold.eps;

  rep.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace dks
